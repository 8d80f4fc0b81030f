"""Linear deformations ``mu + sum a_m phi_m`` and their quadratic obstruction.

For cocycles the Leibniz defect of the deformed bracket is
``sum_{m<=l} a_m a_l T_sym(m, l)`` with

    T(f, g)(x, y, z) = f(x, g(y,z)) - f(g(x,y), z) + f(g(x,z), y)

and ``T_sym(m, l) = T(phi_m, phi_l) + T(phi_l, phi_m)`` for ``m < l``,
``T_sym(m, m) = T(phi_m, phi_m)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .algebra import Algebra, Defect, _axpy, _dense, leibniz_defects
from .cohomology import Cochain2, CohomologyError, cocycle_defects, linear_combination
from .linalg import Echelon
from .scalar import ZERO, GaussianRational, as_scalar

__all__ = [
    "DeformationError",
    "Trilinear",
    "ObstructionReport",
    "DeformResult",
    "obstruction_tensor",
    "obstruction_report",
    "deform",
    "subspace_integrable",
    "evaluate_obstruction",
    "random_coefficients",
]

Sparse = Dict[int, GaussianRational]
# (x, y, z) -> sparse output vector
Trilinear = Dict[Tuple[int, int, int], Sparse]


class DeformationError(ValueError):
    pass


def obstruction_tensor(f: Cochain2, g: Cochain2) -> Trilinear:
    """``T(x,y,z) = f(x, g(y,z)) - f(g(x,y), z) + f(g(x,z), y)`` on basis triples."""
    if not f.base.same_table(g.base):
        raise DeformationError("cochains are over different algebras")
    n = f.base.dim
    one = as_scalar(1)
    out: Trilinear = {}
    for x in range(n):
        ex = {x: one}
        for y in range(n):
            ey = {y: one}
            gxy = g.value(x, y)
            for z in range(n):
                ez = {z: one}
                acc: Sparse = {}
                _axpy(acc, one, f.apply(ex, g.value(y, z)))
                if gxy:
                    _axpy(acc, -one, f.apply(gxy, ez))
                _axpy(acc, one, f.apply(g.value(x, z), ey))
                if acc:
                    out[(x, y, z)] = acc
    return out


def _flatten3(t: Trilinear, n: int) -> Sparse:
    return {((x * n + y) * n + z) * n + l: c for (x, y, z), v in t.items() for l, c in v.items()}


def _tri_add(acc: Trilinear, c: GaussianRational, t: Trilinear) -> None:
    for key, v in t.items():
        slot = acc.setdefault(key, {})
        _axpy(slot, c, v)
        if not slot:
            del acc[key]


@dataclass
class ObstructionReport:
    cocycles: List[Cochain2]
    sym_tensors: Dict[Tuple[int, int], Trilinear]
    quadratic_support: Set[Tuple[int, int]] = field(default_factory=set)
    _signature: Optional[Tuple[int, int, int]] = field(default=None, repr=False, compare=False)

    @property
    def k(self) -> int:
        return len(self.cocycles)

    def monomials(self) -> List[str]:
        """Supported monomials as text, e.g. ``a1*a2`` or ``a3^2`` (1-based)."""
        out = []
        for i, j in sorted(self.quadratic_support):
            out.append(f"a{i + 1}^2" if i == j else f"a{i + 1}*a{j + 1}")
        return out

    def nonzero_counts(self) -> Dict[Tuple[int, int], int]:
        return {key: sum(len(v) for v in t.values()) for key, t in sorted(self.sym_tensors.items())}

    def support_counts(self) -> Tuple[int, int, int]:
        """``(number of cocycles, supported monomials, supported squares)`` in this basis."""
        sq = sum(1 for i, j in self.quadratic_support if i == j)
        return (self.k, len(self.quadratic_support), sq)

    def signature(self) -> Tuple[int, int, int]:
        """``(k, rank, radical)`` of the obstruction as a quadratic map into ``C^3 / BL^3``.

        ``rank`` is the dimension of the span of the classes ``[T_sym(i, j)]`` and
        ``radical`` the dimension of ``{v : [polar(v, w)] = 0 for all w}``.  Both are
        unchanged by a change of representatives or of the algebra basis.
        """
        if self._signature is None:
            self._signature = self._compute_signature()
        return self._signature

    def _compute_signature(self) -> Tuple[int, int, int]:
        k = self.k
        if k == 0:
            return (0, 0, 0)
        from .cohomology import bl3_basis

        a = self.cocycles[0].base
        n = a.dim
        bl3 = bl3_basis(a).copy_echelon()
        res = {key: bl3.reduce(_flatten3(t, n)) for key, t in self.sym_tensors.items()}
        span = Echelon(n ** 4)
        for r in res.values():
            span.add(dict(r))
        # row i of the polar matrix: the blocks [polar(e_i, e_j)] for j = 0..k-1
        width = n ** 4
        polar = Echelon(k * width)
        for i in range(k):
            row: Sparse = {}
            for j in range(k):
                r = res[(min(i, j), max(i, j))]
                c = 2 if i == j else 1
                for col, x in r.items():
                    row[j * width + col] = c * x
            polar.add(row)
        return (k, span.rank, k - polar.rank)

    def quadratic(self, coeffs: Sequence) -> Trilinear:
        """``sum_{i<=j} c_i c_j T_sym(i,j)``."""
        c = [as_scalar(x) for x in coeffs]
        if len(c) != self.k:
            raise DeformationError(f"expected {self.k} coefficients, got {len(c)}")
        acc: Trilinear = {}
        for (i, j), t in self.sym_tensors.items():
            w = c[i] * c[j]
            if w:
                _tri_add(acc, w, t)
        return acc

    def polar(self, u: Sequence, v: Sequence) -> Trilinear:
        """Symmetric bilinear form with ``polar(u, u) = 2 * quadratic(u)``."""
        u = [as_scalar(x) for x in u]
        v = [as_scalar(x) for x in v]
        acc: Trilinear = {}
        for (i, j), t in self.sym_tensors.items():
            w = u[i] * v[j] + u[j] * v[i] if i != j else 2 * u[i] * v[i]
            if w:
                _tri_add(acc, w, t)
        return acc

    def vanishes_identically(self) -> bool:
        return not self.quadratic_support


def obstruction_report(cocycles: Sequence[Cochain2], check: bool = True) -> ObstructionReport:
    """All symmetric obstruction tensors of a family of cocycles."""
    cocycles = list(cocycles)
    if check:
        for f in cocycles:
            if cocycle_defects(f.base, f):
                raise DeformationError(f"{f.name} is not a 2-cocycle")
    k = len(cocycles)
    raw = {}
    for i in range(k):
        for j in range(k):
            raw[(i, j)] = obstruction_tensor(cocycles[i], cocycles[j])
    one = as_scalar(1)
    sym = {}
    support = set()
    for i in range(k):
        for j in range(i, k):
            t: Trilinear = {}
            _tri_add(t, one, raw[(i, j)])
            if i != j:
                _tri_add(t, one, raw[(j, i)])
            sym[(i, j)] = t
            if t:
                support.add((i, j))
    return ObstructionReport(cocycles, sym, support)


@dataclass
class DeformResult:
    algebra: Algebra
    defects: List[Defect]

    @property
    def integrable(self) -> bool:
        return not self.defects

    def __bool__(self) -> bool:
        return self.integrable


def deform(a: Algebra, cocycles: Sequence[Cochain2], coeffs: Sequence, name: Optional[str] = None) -> DeformResult:
    """Bracket ``mu + sum c_m phi_m``, checked against the Leibniz identity."""
    coeffs = [as_scalar(c) for c in coeffs]
    if len(coeffs) != len(cocycles):
        raise DeformationError(f"expected {len(cocycles)} coefficients, got {len(coeffs)}")
    prod = a.products()
    for f, c in zip(cocycles, coeffs):
        if not f.base.same_table(a):
            raise DeformationError(f"{f.name} is over a different algebra")
        if not c:
            continue
        for key, v in f.values().items():
            _axpy(prod.setdefault(key, {}), c, v)
    out = Algebra(name or f"{a.name}_t", a.labels, prod)
    return DeformResult(out, leibniz_defects(out))


def evaluate_obstruction(report: ObstructionReport, coeffs: Sequence) -> bool:
    """True when the quadratic obstruction vanishes at ``coeffs``."""
    return not report.quadratic(coeffs)


def subspace_integrable(report: ObstructionReport, directions: Iterable) -> bool:
    """Is ``mu + span(directions)`` integrable for every choice of coefficients?

    Each direction is either an index into ``report.cocycles`` or a coefficient
    vector of length ``report.k`` (a tied combination such as ``phi2 - phi3``).
    """
    vecs = []
    for d in directions:
        if isinstance(d, int):
            if not 0 <= d < report.k:
                raise DeformationError(f"direction index {d} out of range")
            vecs.append([1 if m == d else 0 for m in range(report.k)])
        else:
            d = list(d)
            if len(d) != report.k:
                raise DeformationError(f"direction must have {report.k} coefficients")
            vecs.append(d)
    for p in range(len(vecs)):
        if report.quadratic(vecs[p]):
            return False
        for q in range(p + 1, len(vecs)):
            if report.polar(vecs[p], vecs[q]):
                return False
    return True


def random_coefficients(rng: random.Random, k: int, nonzero: bool = False, bound: int = 9) -> List[GaussianRational]:
    """Small random rationals ``p/q``; ``nonzero`` forbids the all-zero vector."""
    while True:
        out = []
        for _ in range(k):
            p = rng.randint(-bound, bound)
            q = rng.randint(1, bound)
            out.append(as_scalar(Fraction(p, q)))
        if not nonzero or any(out):
            return out
