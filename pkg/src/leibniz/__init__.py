"""Exact computations with finite-dimensional Leibniz algebras over Q(i)."""

from .scalar import GaussianRational, I, ONE, ZERO, as_scalar, format_scalar, parse_scalar
from .linalg import Matrix, Subspace, extend_to_basis, kernel_basis, rank, rref
from .algebra import (
    Algebra,
    AlgebraError,
    bracket,
    center,
    change_basis,
    check_morphism,
    fingerprint,
    ideal_closure,
    is_leibniz,
    is_lie,
    left_annihilator,
    leibniz_defects,
    product_space,
    quotient_algebra,
    right_annihilator,
    squares_ideal,
)
from .modules import (
    MatrixEmbedding,
    RightModule,
    action_from_embedding,
    embedding_defects,
    fock_module,
    right_module_defects,
    semidirect,
)
from .cohomology import Cochain2, bl2_basis, cocycle_defects, hl2, reduce_mod_bl2, zl2_basis
from .deformation import deform, obstruction_report, obstruction_tensor, subspace_integrable
from . import catalog, lba

__version__ = "0.1.0"
