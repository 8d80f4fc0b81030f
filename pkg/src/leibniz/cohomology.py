"""Second Leibniz cohomology with adjoint coefficients.

A 2-cochain ``f`` is flattened to a vector of length ``n**3`` in the order
``i`` (first argument), then ``j`` (second argument), then ``k`` (output
component): coordinate ``i*n*n + j*n + k`` holds the ``e_k`` component of
``f(e_i, e_j)``.

Conventions::

    (d1 D)(x, y)    = [D x, y] + [x, D y] - D[x, y]
    (d2 f)(x, y, z) = [x, f(y,z)] - [f(x,y), z] + [f(x,z), y]
                      + f(x, [y,z]) - f([x,y], z) + f([x,z], y)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError, Defect, _axpy, _dense, _sparse
from .linalg import Echelon, Matrix, Subspace, echelon_of_rows, kernel_of_rows
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "CohomologyError",
    "Cochain2",
    "CohomologySpaces",
    "coboundary_of",
    "coboundary_matrix",
    "bl2_basis",
    "cocycle_defects",
    "is_cocycle",
    "cocycle_equations",
    "zl2_basis",
    "bl3_basis",
    "hl2",
    "reduce_mod_bl2",
    "Reduction",
]

Sparse = Dict[int, GaussianRational]


class CohomologyError(ValueError):
    pass


class Cochain2:
    """Bilinear map ``L x L -> L`` stored as ``(i, j) -> {k: coeff}``."""

    __slots__ = ("name", "base", "_val")

    def __init__(self, base: Algebra, values: Mapping[Tuple[int, int], Mapping[int, object]], name: str = "f") -> None:
        n = base.dim
        val = {}
        for (i, j), vec in values.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in vec):
                raise CohomologyError(f"cochain index out of range in {name}")
            v = {k: as_scalar(c) for k, c in vec.items()}
            v = {k: c for k, c in v.items() if c}
            if v:
                val[(i, j)] = v
        self.base = base
        self.name = name
        self._val = val

    @classmethod
    def from_table(
        cls, base: Algebra, table: Mapping[Tuple[str, str], Mapping[str, object]], name: str = "f"
    ) -> "Cochain2":
        vals: Dict[Tuple[int, int], Sparse] = {}
        for (x, y), vec in table.items():
            key = (base.index(x), base.index(y))
            if key in vals:
                raise CohomologyError(f"value {name}({x},{y}) given twice")
            vals[key] = {base.index(z): as_scalar(c) for z, c in vec.items()}
        return cls(base, vals, name)

    @classmethod
    def from_flat(cls, base: Algebra, flat: Sequence, name: str = "f") -> "Cochain2":
        n = base.dim
        if len(flat) != n ** 3:
            raise CohomologyError(f"flat cochain must have length {n ** 3}")
        vals: Dict[Tuple[int, int], Sparse] = {}
        for idx, c in enumerate(flat):
            if c:
                i, rest = divmod(idx, n * n)
                j, k = divmod(rest, n)
                vals.setdefault((i, j), {})[k] = c
        return cls(base, vals, name)

    @classmethod
    def from_algebra(cls, a: Algebra, name: str = "mu") -> "Cochain2":
        return cls(a, a.products(), name)

    @classmethod
    def zero(cls, base: Algebra, name: str = "0") -> "Cochain2":
        return cls(base, {}, name)

    def value(self, i: int, j: int) -> Sparse:
        return self._val.get((i, j), _EMPTY)

    def values(self) -> Dict[Tuple[int, int], Sparse]:
        return {k: dict(v) for k, v in sorted(self._val.items())}

    def evaluate(self, u: Sequence, v: Sequence) -> Tuple[GaussianRational, ...]:
        return _dense(self.apply(_sparse(u), _sparse(v)), self.base.dim)

    def apply(self, u: Mapping[int, GaussianRational], v: Mapping[int, GaussianRational]) -> Sparse:
        out: Sparse = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self._val.get((i, j))
                if w:
                    _axpy(out, a * b, w)
        return out

    def flat_sparse(self) -> Sparse:
        n = self.base.dim
        return {i * n * n + j * n + k: c for (i, j), v in self._val.items() for k, c in v.items()}

    def flatten(self) -> Tuple[GaussianRational, ...]:
        n = self.base.dim
        return _dense(self.flat_sparse(), n ** 3)

    def tensor(self):
        n = self.base.dim
        return tuple(tuple(_dense(self.value(i, j), n) for j in range(n)) for i in range(n))

    def is_zero(self) -> bool:
        return not self._val

    def _combine(self, other: "Cochain2", sign: int) -> "Cochain2":
        if not other.base.same_table(self.base):
            raise CohomologyError("cochains over different algebras")
        vals = self.values()
        s = as_scalar(sign)
        for key, v in other._val.items():
            acc = vals.setdefault(key, {})
            _axpy(acc, s, v)
        return Cochain2(self.base, vals, self.name)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        return self._combine(other, 1)

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        return self._combine(other, -1)

    def scale(self, c) -> "Cochain2":
        c = as_scalar(c)
        return Cochain2(self.base, {k: {m: c * x for m, x in v.items()} for k, v in self._val.items()}, self.name)

    def __neg__(self) -> "Cochain2":
        return self.scale(-1)

    def renamed(self, name: str) -> "Cochain2":
        return Cochain2(self.base, self._val, name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain2):
            return NotImplemented
        return self.base.same_table(other.base) and self._val == other._val

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.flat_sparse().items())))

    def __repr__(self) -> str:
        return f"Cochain2({self.name!r}, over={self.base.name!r}, nonzero={len(self._val)})"


_EMPTY: Sparse = {}


def linear_combination(cochains: Sequence[Cochain2], coeffs: Sequence, name: str = "f") -> Cochain2:
    if len(cochains) != len(coeffs):
        raise CohomologyError("one coefficient per cochain is required")
    if not cochains:
        raise CohomologyError("empty combination")
    vals: Dict[Tuple[int, int], Sparse] = {}
    for f, c in zip(cochains, coeffs):
        c = as_scalar(c)
        if not c:
            continue
        for key, v in f._val.items():
            _axpy(vals.setdefault(key, {}), c, v)
    return Cochain2(cochains[0].base, vals, name)


def coboundary_of(a: Algebra, d: Matrix, name: str = "df") -> Cochain2:
    """``f(x,y) = [d x, y] + [x, d y] - d[x, y]``; ``d`` acts on column vectors."""
    n = a.dim
    if d.shape != (n, n):
        raise CohomologyError(f"linear map must be {n}x{n}")
    cols = [_sparse(d.column(j)) for j in range(n)]
    one = as_scalar(1)
    vals = {}
    for i in range(n):
        for j in range(n):
            acc = a.mul_sparse(cols[i], {j: one})
            _axpy(acc, one, a.mul_sparse({i: one}, cols[j]))
            for k, c in a.product(i, j).items():
                _axpy(acc, -c, cols[k])
            if acc:
                vals[(i, j)] = acc
    return Cochain2(a, vals, name)


def coboundary_matrix(a: Algebra) -> List[Sparse]:
    """Images of the elementary maps ``E_pq`` (``e_q -> e_p``), flattened, in order ``p*n + q``."""
    n = a.dim
    one = as_scalar(1)
    out = []
    for p in range(n):
        for q in range(n):
            vals: Dict[Tuple[int, int], Sparse] = {}
            # [E e_i, e_j] is nonzero only for i = q; [e_i, E e_j] only for j = q
            for j in range(n):
                v = a.product(p, j)
                if v:
                    _axpy(vals.setdefault((q, j), {}), one, v)
            for i in range(n):
                v = a.product(i, p)
                if v:
                    _axpy(vals.setdefault((i, q), {}), one, v)
            for i in range(n):
                for j in range(n):
                    c = a.product(i, j).get(q)
                    if c:
                        _axpy(vals.setdefault((i, j), {}), -c, {p: one})
            flat = {i * n * n + j * n + k: c for (i, j), v in vals.items() for k, c in v.items() if c}
            out.append(flat)
    return out


def bl2_basis(a: Algebra) -> Subspace:
    """``BL^2`` as a subspace of the flattened cochain space."""
    return Subspace.from_sparse_rows(a.dim ** 3, coboundary_matrix(a))


def cocycle_equations(a: Algebra) -> List[Sparse]:
    """Rows of the ``d2`` coefficient matrix: one per ``(i, j, k, l)``, columns are flat unknowns."""
    return [row for _, row in _d2_system(a)]


def _d2_system(a: Algebra) -> List[Tuple[int, Sparse]]:
    """Nonzero rows of ``d2`` tagged with the flat 3-cochain index ``((i*n + j)*n + k)*n + l``."""
    n = a.dim
    nn = n * n
    prod = {key: v for key, v in a.products().items()}
    # left[i] : list of (c, l, coeff) for [e_i, e_c] ; right[k] : (c, l, coeff) for [e_c, e_k]
    left = [[(c, l, x) for c in range(n) for l, x in prod.get((i, c), {}).items()] for i in range(n)]
    right = [[(c, l, x) for c in range(n) for l, x in prod.get((c, k), {}).items()] for k in range(n)]
    rows: List[Tuple[int, Sparse]] = []
    for i in range(n):
        for j in range(n):
            pij = prod.get((i, j), {})
            for k in range(n):
                pjk = prod.get((j, k), {})
                pik = prod.get((i, k), {})
                eq: Dict[int, Sparse] = {}

                def add(l: int, col: int, x: GaussianRational) -> None:
                    r = eq.setdefault(l, {})
                    nv = r.get(col, ZERO) + x
                    if nv:
                        r[col] = nv
                    else:
                        r.pop(col, None)

                # [x_i, f(x_j, x_k)]
                for c, l, x in left[i]:
                    add(l, j * nn + k * n + c, x)
                # -[f(x_i, x_j), x_k]
                for c, l, x in right[k]:
                    add(l, i * nn + j * n + c, -x)
                # +[f(x_i, x_k), x_j]
                for c, l, x in right[j]:
                    add(l, i * nn + k * n + c, x)
                for l in range(n):
                    # f(x_i, [x_j, x_k])
                    for m, x in pjk.items():
                        add(l, i * nn + m * n + l, x)
                    # -f([x_i, x_j], x_k)
                    for m, x in pij.items():
                        add(l, m * nn + k * n + l, -x)
                    # +f([x_i, x_k], x_j)
                    for m, x in pik.items():
                        add(l, m * nn + j * n + l, x)
                base = ((i * n + j) * n + k) * n
                for l in sorted(eq):
                    if eq[l]:
                        rows.append((base + l, eq[l]))
    return rows


def zl2_basis(a: Algebra) -> Subspace:
    """``ZL^2``: kernel of the ``d2`` coefficient system."""
    space, _ = kernel_of_rows(a.dim ** 3, cocycle_equations(a))
    return space


def bl3_basis(a: Algebra) -> Subspace:
    """``BL^3 = d2(C^2)`` inside the flattened 3-cochain space (length ``n**4``)."""
    cols: Dict[int, Sparse] = {}
    for r, row in _d2_system(a):
        for c, x in row.items():
            cols.setdefault(c, {})[r] = x
    return Subspace(a.dim ** 4, echelon_of_rows(a.dim ** 4, [cols[c] for c in sorted(cols)]))


def cocycle_defects(a: Algebra, f: Cochain2) -> List[Defect]:
    """Basis triples where ``d2 f`` is nonzero, evaluated directly from the definition."""
    if not f.base.same_table(a):
        raise CohomologyError("cochain is over a different algebra")
    n = a.dim
    one = as_scalar(1)
    out = []
    for i in range(n):
        ei = {i: one}
        for j in range(n):
            ej = {j: one}
            for k in range(n):
                ek = {k: one}
                d: Sparse = {}
                _axpy(d, one, a.mul_sparse(ei, f.value(j, k)))
                _axpy(d, -one, a.mul_sparse(f.value(i, j), ek))
                _axpy(d, one, a.mul_sparse(f.value(i, k), ej))
                _axpy(d, one, f.apply(ei, a.product(j, k)))
                _axpy(d, -one, f.apply(a.product(i, j), ek))
                _axpy(d, one, f.apply(a.product(i, k), ej))
                if d:
                    out.append(Defect(i, j, k, _dense(d, n)))
    return out


def is_cocycle(a: Algebra, f: Cochain2) -> bool:
    return not cocycle_defects(a, f)


@dataclass
class CohomologySpaces:
    algebra: Algebra
    bl2: Subspace
    zl2: Subspace
    hl2_reps: List[Cochain2]

    @property
    def dims(self) -> Tuple[int, int, int]:
        return (self.bl2.dim, self.zl2.dim, len(self.hl2_reps))

    def reducer(self) -> "Reduction":
        return Reduction(self)


def hl2(a: Algebra) -> CohomologySpaces:
    """``BL^2``, ``ZL^2`` and canonical ``HL^2`` representatives.

    Representatives are the ``ZL^2`` RREF basis vectors that are independent
    modulo ``BL^2``, taken greedily in order.
    """
    from .linalg import extend_to_basis

    bl = bl2_basis(a)
    zl = zl2_basis(a)
    reps = extend_to_basis(bl, zl)
    cochains = [Cochain2.from_flat(a, r, name=f"h{m + 1}") for m, r in enumerate(reps)]
    return CohomologySpaces(a, bl, zl, cochains)


class Reduction:
    """Decompose cocycles as ``sum c_m rep_m + coboundary``."""

    def __init__(self, spaces: CohomologySpaces) -> None:
        self.spaces = spaces
        self.n3 = spaces.algebra.dim ** 3
        h = len(spaces.hl2_reps)
        self._bl = spaces.bl2.copy_echelon()
        # residues of the representatives, tagged with identity columns to solve for coefficients
        self._aug = Echelon(self.n3 + h)
        for m, rep in enumerate(spaces.hl2_reps):
            res = self._bl.reduce(rep.flat_sparse())
            res[self.n3 + m] = ONE
            self._aug.add(res)

    def coordinates(self, f: Cochain2) -> Tuple[Tuple[GaussianRational, ...], Cochain2]:
        sp = self.spaces
        if not f.base.same_table(sp.algebra):
            raise CohomologyError("cochain is over a different algebra")
        if cocycle_defects(sp.algebra, f):
            raise CohomologyError(f"{f.name} is not a 2-cocycle")
        res = self._bl.reduce(f.flat_sparse())
        left = self._aug.reduce(res)
        h = len(sp.hl2_reps)
        if any(k < self.n3 for k in left):
            raise CohomologyError("cocycle not in the span of ZL^2 representatives")  # pragma: no cover
        coords = tuple(-left.get(self.n3 + m, ZERO) for m in range(h))
        if h:
            combo = linear_combination(sp.hl2_reps, coords)
        else:
            combo = Cochain2.zero(sp.algebra)
        cob = (f - combo).renamed(f"{f.name}-coboundary")
        return coords, cob


def reduce_mod_bl2(
    a: Algebra, f: Cochain2, spaces: Optional[CohomologySpaces] = None
) -> Tuple[Tuple[GaussianRational, ...], Cochain2]:
    """Coordinates of ``f`` on the ``HL^2`` representatives and the coboundary remainder."""
    if spaces is None:
        spaces = hl2(a)
    return Reduction(spaces).coordinates(f)
