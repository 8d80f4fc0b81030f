"""Finite-dimensional algebras given by structure constants.

``[e_i, e_j] = sum_k C[i][j][k] e_k``.  Products are stored sparsely: a
mapping ``(i, j) -> {k: coeff}`` holding only nonzero entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .linalg import Echelon, LinalgError, Matrix, Subspace
from .scalar import ZERO, GaussianRational, as_scalar

__all__ = [
    "AlgebraError",
    "IdealError",
    "Algebra",
    "Defect",
    "LieVerdict",
    "MorphismReport",
    "Fingerprint",
    "bracket",
    "leibniz_defects",
    "is_leibniz",
    "is_lie",
    "right_annihilator",
    "left_annihilator",
    "center",
    "product_space",
    "squares_ideal",
    "ideal_closure",
    "quotient_algebra",
    "change_basis",
    "check_morphism",
    "fingerprint",
]

Sparse = Dict[int, GaussianRational]


class AlgebraError(ValueError):
    pass


class IdealError(AlgebraError):
    def __init__(self, witness: Tuple[str, str], value) -> None:
        self.witness = witness
        self.value = value
        super().__init__(f"subspace is not a two-sided ideal: product {witness} leaves it")


def _clean(vec: Mapping[int, object]) -> Sparse:
    out = {}
    for k, v in vec.items():
        v = as_scalar(v)
        if v:
            out[k] = v
    return out


def _axpy(acc: Sparse, c: GaussianRational, x: Mapping[int, GaussianRational]) -> None:
    """acc += c * x, in place."""
    for k, v in x.items():
        nv = acc.get(k, ZERO) + c * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def _dense(vec: Mapping[int, GaussianRational], n: int) -> Tuple[GaussianRational, ...]:
    out = [ZERO] * n
    for k, v in vec.items():
        out[k] = v
    return tuple(out)


def _sparse(vec: Sequence) -> Sparse:
    return {k: as_scalar(v) for k, v in enumerate(vec) if v}


class Algebra:
    """An algebra with a bilinear bracket, immutable once built."""

    __slots__ = ("name", "labels", "field_tag", "_prod", "_index")

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        products: Mapping[Tuple[int, int], Mapping[int, object]],
        field_tag: Optional[str] = None,
    ) -> None:
        self.name = name
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise AlgebraError("basis labels must be distinct")
        n = len(self.labels)
        prod: Dict[Tuple[int, int], Sparse] = {}
        for (i, j), vec in products.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
                raise AlgebraError(f"product index out of range in {name}")
            v = _clean(vec)
            if v:
                prod[(i, j)] = v
        self._prod = prod
        self._index = {lbl: k for k, lbl in enumerate(self.labels)}
        real = all(x.is_real() for v in prod.values() for x in v.values())
        if field_tag is None:
            field_tag = "rational" if real else "gaussian"
        if field_tag not in ("rational", "gaussian"):
            raise AlgebraError(f"unknown field tag {field_tag!r}")
        if field_tag == "rational" and not real:
            raise AlgebraError("field tag 'rational' but some structure constant is not real")
        self.field_tag = field_tag

    # construction helpers ------------------------------------------------

    @classmethod
    def from_table(
        cls,
        name: str,
        labels: Sequence[str],
        table: Mapping[Tuple[str, str], Mapping[str, object]],
        antisymmetric: bool = False,
        field_tag: Optional[str] = None,
    ) -> "Algebra":
        """Build from a label-keyed table; ``antisymmetric`` adds ``[y,x] = -[x,y]``."""
        idx = {lbl: k for k, lbl in enumerate(labels)}
        prod: Dict[Tuple[int, int], Sparse] = {}
        for (x, y), vec in table.items():
            i, j = idx[x], idx[y]
            v = {idx[z]: as_scalar(c) for z, c in vec.items()}
            if (i, j) in prod:
                raise AlgebraError(f"product [{x},{y}] given twice")
            prod[(i, j)] = v
            if antisymmetric and i != j:
                if (j, i) in prod:
                    raise AlgebraError(f"product [{y},{x}] given twice")
                prod[(j, i)] = {k: -c for k, c in v.items()}
        return cls(name, labels, prod, field_tag)

    @classmethod
    def from_tensor(cls, name: str, labels: Sequence[str], tensor, field_tag: Optional[str] = None) -> "Algebra":
        n = len(labels)
        prod = {}
        for i in range(n):
            for j in range(n):
                v = _sparse(tensor[i][j])
                if v:
                    prod[(i, j)] = v
        return cls(name, labels, prod, field_tag)

    @classmethod
    def abelian(cls, n: int, name: str = "abelian", labels: Optional[Sequence[str]] = None) -> "Algebra":
        return cls(name, labels or [f"e{k + 1}" for k in range(n)], {})

    def renamed(self, name: str) -> "Algebra":
        return Algebra(name, self.labels, self._prod, self.field_tag)

    # access -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise AlgebraError(f"{self.name} has no basis element {label!r}") from None

    def product(self, i: int, j: int) -> Sparse:
        """Sparse ``[e_i, e_j]``; do not mutate the result."""
        return self._prod.get((i, j), _EMPTY)

    def products(self) -> Dict[Tuple[int, int], Sparse]:
        return {k: dict(v) for k, v in sorted(self._prod.items())}

    def structure(self) -> Tuple[Tuple[Tuple[GaussianRational, ...], ...], ...]:
        """Dense tensor ``C[i][j][k]``."""
        n = self.dim
        return tuple(tuple(_dense(self.product(i, j), n) for j in range(n)) for i in range(n))

    def basis_vector(self, k) -> Tuple[GaussianRational, ...]:
        if isinstance(k, str):
            k = self.index(k)
        return tuple(as_scalar(1) if m == k else ZERO for m in range(self.dim))

    def vector(self, combo: Mapping[str, object]) -> Tuple[GaussianRational, ...]:
        """Dense vector from ``{label: coeff}``."""
        v = [ZERO] * self.dim
        for lbl, c in combo.items():
            v[self.index(lbl)] = v[self.index(lbl)] + as_scalar(c)
        return tuple(v)

    def mul_sparse(self, u: Mapping[int, GaussianRational], v: Mapping[int, GaussianRational]) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            for j, b in v.items():
                p = self._prod.get((i, j))
                if p:
                    _axpy(out, a * b, p)
        return out

    def same_table(self, other: "Algebra") -> bool:
        return self.dim == other.dim and self._prod == other._prod

    def is_real(self) -> bool:
        return all(x.is_real() for v in self._prod.values() for x in v.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.name == other.name
            and self.labels == other.labels
            and self.field_tag == other.field_tag
            and self._prod == other._prod
        )

    def __hash__(self) -> int:
        return hash((self.name, self.labels, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self._prod.items()))))

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim={self.dim}, nonzero_products={len(self._prod)})"

    def describe(self) -> List[str]:
        """Nonzero products as text lines, ordered by basis index."""
        from .lba import format_combination

        lines = []
        for (i, j), v in sorted(self._prod.items()):
            lines.append(f"[{self.labels[i]},{self.labels[j]}] = {format_combination(v, self.labels)}")
        return lines


_EMPTY: Sparse = {}


class Defect(NamedTuple):
    """A nonzero value of an identity on basis elements ``(i, j, k)``."""

    i: int
    j: int
    k: int
    value: Tuple[GaussianRational, ...]


@dataclass(frozen=True)
class LieVerdict:
    is_lie: bool
    antisymmetry_witnesses: Tuple[Tuple[int, int], ...]
    leibniz_witnesses: Tuple[Defect, ...]

    def __bool__(self) -> bool:
        return self.is_lie


@dataclass(frozen=True)
class MorphismReport:
    holds: bool
    is_isomorphism: bool
    defects: Tuple[Tuple[int, int, Tuple[GaussianRational, ...]], ...]

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class Fingerprint:
    dim: int
    dim_product_space: int
    dim_right_annihilator: int
    dim_left_annihilator: int
    dim_center: int
    dim_squares_ideal: int
    is_lie: bool
    dim_HL2: Optional[int] = None
    obstruction_support_signature: Optional[Tuple[int, int, int]] = None

    def structural(self) -> tuple:
        return (
            self.dim,
            self.dim_product_space,
            self.dim_right_annihilator,
            self.dim_left_annihilator,
            self.dim_center,
            self.dim_squares_ideal,
            self.is_lie,
        )

    def items(self) -> List[Tuple[str, object]]:
        return [
            ("dim", self.dim),
            ("dim_product_space", self.dim_product_space),
            ("dim_right_annihilator", self.dim_right_annihilator),
            ("dim_left_annihilator", self.dim_left_annihilator),
            ("dim_center", self.dim_center),
            ("dim_squares_ideal", self.dim_squares_ideal),
            ("is_lie", self.is_lie),
            ("dim_HL2", self.dim_HL2),
            ("obstruction_support_signature", self.obstruction_support_signature),
        ]


# operations -----------------------------------------------------------------


def bracket(a: Algebra, u: Sequence, v: Sequence) -> Tuple[GaussianRational, ...]:
    if len(u) != a.dim or len(v) != a.dim:
        raise AlgebraError(f"vectors must have length {a.dim}")
    return _dense(a.mul_sparse(_sparse(u), _sparse(v)), a.dim)


def _right_mult(a: Algebra, vec: Sparse, k: int) -> Sparse:
    """[vec, e_k]"""
    out: Sparse = {}
    for l, c in vec.items():
        p = a._prod.get((l, k))
        if p:
            _axpy(out, c, p)
    return out


def _left_mult(a: Algebra, i: int, vec: Sparse) -> Sparse:
    """[e_i, vec]"""
    out: Sparse = {}
    for l, c in vec.items():
        p = a._prod.get((i, l))
        if p:
            _axpy(out, c, p)
    return out


def leibniz_defects(a: Algebra, triples: Optional[Iterable[Tuple[int, int, int]]] = None) -> List[Defect]:
    """Basis triples where ``[[x,y],z] - [[x,z],y] - [x,[y,z]]`` is nonzero.

    ``triples`` restricts the scan (used for truncated algebras).
    """
    n = a.dim
    if triples is None:
        triples = ((i, j, k) for i in range(n) for j in range(n) for k in range(n))
    out = []
    for i, j, k in triples:
        d: Sparse = {}
        _axpy(d, as_scalar(1), _right_mult(a, a.product(i, j), k))
        _axpy(d, as_scalar(-1), _right_mult(a, a.product(i, k), j))
        _axpy(d, as_scalar(-1), _left_mult(a, i, a.product(j, k)))
        if d:
            out.append(Defect(i, j, k, _dense(d, n)))
    return out


def is_leibniz(a: Algebra) -> bool:
    return not leibniz_defects(a)


def is_lie(a: Algebra) -> LieVerdict:
    """Antisymmetric and Leibniz (together equivalent to the Jacobi identity)."""
    n = a.dim
    anti = []
    for i in range(n):
        for j in range(i, n):
            pij, pji = a.product(i, j), a.product(j, i)
            s = dict(pij)
            _axpy(s, as_scalar(1), pji)
            if s:
                anti.append((i, j))
    defects = leibniz_defects(a)
    return LieVerdict(not anti and not defects, tuple(anti), tuple(defects))


def _kernel_of_stacked(a: Algebra, left: bool, right: bool) -> Subspace:
    n = a.dim
    e = Echelon(n)
    # rows index (x, output k); columns index the unknown z
    for x in range(n):
        if right:
            rows: Dict[int, Sparse] = {}
            for j in range(n):
                for k, c in a.product(x, j).items():
                    rows.setdefault(k, {})[j] = c
            for r in rows.values():
                e.add(r)
        if left:
            rows = {}
            for j in range(n):
                for k, c in a.product(j, x).items():
                    rows.setdefault(k, {})[j] = c
            for r in rows.values():
                e.add(r)
    return Subspace.span(n, e.null_space())


def right_annihilator(a: Algebra) -> Subspace:
    """``{z : [x, z] = 0 for all x}``."""
    return _kernel_of_stacked(a, left=False, right=True)


def left_annihilator(a: Algebra) -> Subspace:
    """``{z : [z, x] = 0 for all x}``."""
    return _kernel_of_stacked(a, left=True, right=False)


def center(a: Algebra) -> Subspace:
    return _kernel_of_stacked(a, left=True, right=True)


def product_space(a: Algebra) -> Subspace:
    """Span of all products ``[e_i, e_j]``."""
    e = Echelon(a.dim)
    for v in a._prod.values():
        e.add(v)
    return Subspace(a.dim, e)


def ideal_closure(a: Algebra, generators: Iterable[Sparse]) -> Subspace:
    """Smallest two-sided ideal containing the given (sparse) vectors."""
    n = a.dim
    e = Echelon(n)
    frontier = [g for g in generators if g]
    for g in frontier:
        e.add(g)
    for _ in range(n + 1):
        before = e.rank
        current = [dict(r) for r in e.rows.values()]
        for b in current:
            for k in range(n):
                e.add(_right_mult(a, b, k))
                e.add(_left_mult(a, k, b))
        if e.rank == before:
            break
    return Subspace(n, e)


def squares_ideal(a: Algebra) -> Subspace:
    """Ideal generated by all squares ``[x, x]``."""
    n = a.dim
    gens = []
    for i in range(n):
        for j in range(i, n):
            s = dict(a.product(i, j))
            if i != j:
                _axpy(s, as_scalar(1), a.product(j, i))
            gens.append(s)
    return ideal_closure(a, gens)


def _check_ideal(a: Algebra, ideal: Subspace) -> None:
    n = a.dim
    for b in ideal.basis:
        bs = _sparse(b)
        for k in range(n):
            for side, v in (("right", _right_mult(a, bs, k)), ("left", _left_mult(a, k, bs))):
                if v and not ideal.contains(_dense(v, n)):
                    lbl = "(" + ", ".join(f"{c}*{a.labels[m]}" for m, c in sorted(bs.items())) + ")"
                    w = (lbl, a.labels[k]) if side == "right" else (a.labels[k], lbl)
                    raise IdealError(w, _dense(v, n))


def quotient_algebra(a: Algebra, ideal: Subspace, name: Optional[str] = None) -> Algebra:
    """``a / ideal`` on the complement spanned by the non-pivot basis vectors."""
    if ideal.ambient_dim != a.dim:
        raise AlgebraError("ideal lives in a different space")
    _check_ideal(a, ideal)
    pset = set(ideal.pivots)
    keep = [k for k in range(a.dim) if k not in pset]
    pos = {k: m for m, k in enumerate(keep)}
    e = ideal._ech
    prod = {}
    for x, i in enumerate(keep):
        for y, j in enumerate(keep):
            r = e.reduce(a.product(i, j))
            if r:
                prod[(x, y)] = {pos[k]: c for k, c in r.items()}
    return Algebra(name or f"{a.name}/I", [a.labels[k] for k in keep], prod)


def change_basis(a: Algebra, P: Matrix, name: Optional[str] = None, labels: Optional[Sequence[str]] = None) -> Algebra:
    """Rewrite ``a`` in the basis given by the columns of ``P``: ``[u,v]' = P^-1 [Pu, Pv]``."""
    n = a.dim
    if P.shape != (n, n):
        raise AlgebraError(f"basis change must be {n}x{n}")
    try:
        Pinv = P.inverse()
    except LinalgError:
        raise AlgebraError("basis change matrix is singular") from None
    cols = [_sparse(P.column(j)) for j in range(n)]
    pinv_cols = [_sparse(Pinv.column(j)) for j in range(n)]
    prod = {}
    for x in range(n):
        for y in range(n):
            w = a.mul_sparse(cols[x], cols[y])
            out: Sparse = {}
            for k, c in w.items():
                _axpy(out, c, pinv_cols[k])
            if out:
                prod[(x, y)] = out
    tag = a.field_tag if all(v.is_real() for r in P.data for v in r) else None
    if tag == "rational" and any(not c.is_real() for v in prod.values() for c in v.values()):
        tag = None
    return Algebra(name or a.name, labels or a.labels, prod, tag)


def check_morphism(a: Algebra, b: Algebra, P: Matrix) -> MorphismReport:
    """Does ``P`` (``dim b`` x ``dim a``) satisfy ``P[x,y]_a = [Px, Py]_b`` on basis pairs?"""
    if P.shape != (b.dim, a.dim):
        raise AlgebraError(f"map must be {b.dim}x{a.dim}, got {P.shape}")
    cols = [_sparse(P.column(j)) for j in range(a.dim)]
    defects = []
    for i in range(a.dim):
        for j in range(a.dim):
            lhs: Sparse = {}
            for k, c in a.product(i, j).items():
                _axpy(lhs, c, cols[k])
            rhs = b.mul_sparse(cols[i], cols[j])
            _axpy(lhs, as_scalar(-1), rhs)
            if lhs:
                defects.append((i, j, _dense(lhs, b.dim)))
    holds = not defects
    iso = holds and a.dim == b.dim and P.rank() == a.dim
    return MorphismReport(holds, iso, tuple(defects))


def fingerprint(a: Algebra, with_cohomology: bool = False) -> Fingerprint:
    """Isomorphism invariants; ``with_cohomology`` also fills the HL^2 fields (costly)."""
    lie = is_lie(a).is_lie
    fp = Fingerprint(
        dim=a.dim,
        dim_product_space=product_space(a).dim,
        dim_right_annihilator=right_annihilator(a).dim,
        dim_left_annihilator=left_annihilator(a).dim,
        dim_center=center(a).dim,
        dim_squares_ideal=squares_ideal(a).dim,
        is_lie=lie,
    )
    if with_cohomology:
        from .cohomology import hl2
        from .deformation import obstruction_report

        spaces = hl2(a)
        fp.dim_HL2 = spaces.dims[2]
        fp.obstruction_support_signature = obstruction_report(spaces.hl2_reps).signature()
    return fp
