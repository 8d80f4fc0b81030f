"""Exact linear algebra over the Gaussian rationals.

Rows are eliminated in sparse form (``dict`` column -> value) and kept in
fully reduced row-echelon form as they arrive, so the result is the unique
RREF of the row space whatever order the rows come in.  Pivots are the
first nonzero column of each row.
"""

from __future__ import annotations

from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "LinalgError",
    "ContainmentError",
    "Matrix",
    "Subspace",
    "Echelon",
    "rref",
    "rank",
    "kernel_basis",
    "extend_to_basis",
    "coordinates_in",
    "solve",
]

Vector = Tuple[GaussianRational, ...]
SparseRow = Dict[int, GaussianRational]


class LinalgError(ValueError):
    pass


class ContainmentError(LinalgError):
    """Raised when a subspace is not contained in another; carries a witness."""

    def __init__(self, witness: Vector, message: str = "inner subspace is not contained in outer") -> None:
        self.witness = witness
        super().__init__(f"{message}; witness {[str(x) for x in witness]}")


def _vec(values: Iterable) -> Vector:
    return tuple(as_scalar(v) for v in values)


def _sparse(values: Sequence[GaussianRational]) -> SparseRow:
    return {k: v for k, v in enumerate(values) if v}


def _dense(row: SparseRow, n: int) -> Vector:
    out = [ZERO] * n
    for k, v in row.items():
        out[k] = v
    return tuple(out)


class Echelon:
    """Incremental reduced row-echelon form of a growing set of rows."""

    __slots__ = ("ncols", "rows")

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: Dict[int, SparseRow] = {}  # pivot column -> row with 1 at pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Return ``row`` minus its projection onto the current row space."""
        r = dict(row)
        rows = self.rows
        for c in [c for c in r if c in rows]:
            f = r.get(c)
            if not f:
                continue
            for k, v in rows[c].items():
                nv = r.get(k, ZERO) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: SparseRow) -> Optional[int]:
        """Insert a row; returns its new pivot column or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        p = min(r)
        inv = r[p].inverse()
        if inv != ONE:
            r = {k: v * inv for k, v in r.items()}
        # keep earlier rows reduced at the new pivot
        for q, other in self.rows.items():
            f = other.get(p)
            if f is None or q > p:
                continue
            for k, v in r.items():
                nv = other.get(k, ZERO) - f * v
                if nv:
                    other[k] = nv
                else:
                    other.pop(k, None)
        self.rows[p] = r
        return p

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def basis(self) -> List[Vector]:
        return [_dense(self.rows[p], self.ncols) for p in self.pivots]

    def null_space(self) -> List[Vector]:
        """Basis of the right kernel, one vector per free column (in order)."""
        piv = self.pivots
        pset = set(piv)
        out = []
        for f in range(self.ncols):
            if f in pset:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p in piv:
                x = self.rows[p].get(f)
                if x:
                    v[p] = -x
            out.append(tuple(v))
        return out


class Matrix:
    """Dense rectangular matrix of Gaussian rationals."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data: Iterable[Iterable], ncols: Optional[int] = None) -> None:
        rows = [_vec(r) for r in data]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise LinalgError("matrix rows must all have the same length")
        self.nrows = len(rows)
        self.ncols = ncols
        self.data: Tuple[Vector, ...] = tuple(rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        cols = [_vec(c) for c in columns]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.data], self.ncols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix([[c * a for a in r] for r in self.data], self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise LinalgError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.column(j) for j in range(other.ncols)]
            return Matrix([[_dot(r, c) for c in cols] for r in self.data], other.ncols)
        v = _vec(other)
        if len(v) != self.ncols:
            raise LinalgError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(_dot(r, v) for r in self.data)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise LinalgError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return not any(x for r in self.data for x in r)

    def rank(self) -> int:
        return rref(self)[2]

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise LinalgError("only square matrices are invertible")
        aug = Matrix([list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.data)], 2 * n)
        red, piv, rk = rref(aug)
        if piv[:n] != list(range(n)) or rk < n:
            raise LinalgError("matrix is singular")
        return Matrix([r[n:] for r in red.data[:n]], n)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.data)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def _dot(a: Sequence[GaussianRational], b: Sequence[GaussianRational]) -> GaussianRational:
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s = s + x * y
    return s


def rref(m: Matrix) -> Tuple[Matrix, List[int], int]:
    """Reduced row-echelon form, pivot columns and rank.

    The returned matrix has the same shape as ``m``; zero rows come last.
    """
    e = Echelon(m.ncols)
    for r in m.data:
        e.add(_sparse(r))
    rows = e.basis()
    rows += [tuple([ZERO] * m.ncols)] * (m.nrows - len(rows))
    return Matrix(rows, m.ncols), e.pivots, e.rank


def rank(m: Matrix) -> int:
    return rref(m)[2]


class Subspace:
    """A subspace of ``Q(i)^n`` held by its RREF basis."""

    __slots__ = ("ambient_dim", "_ech")

    def __init__(self, ambient_dim: int, echelon: Optional[Echelon] = None) -> None:
        self.ambient_dim = ambient_dim
        self._ech = echelon if echelon is not None else Echelon(ambient_dim)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        e = Echelon(ambient_dim)
        for v in vectors:
            v = _vec(v)
            if len(v) != ambient_dim:
                raise LinalgError(f"vector of length {len(v)} in ambient space of dim {ambient_dim}")
            e.add(_sparse(v))
        return cls(ambient_dim, e)

    @classmethod
    def from_sparse_rows(cls, ambient_dim: int, rows: Iterable[SparseRow]) -> "Subspace":
        e = Echelon(ambient_dim)
        for r in rows:
            e.add(r)
        return cls(ambient_dim, e)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span(n, Matrix.identity(n).data)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def basis(self) -> List[Vector]:
        return self._ech.basis()

    @property
    def pivots(self) -> List[int]:
        return self._ech.pivots

    def __len__(self) -> int:
        return self.dim

    def contains(self, v: Sequence) -> bool:
        return self._ech.contains(_sparse(_vec(v)))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, tuple(self.basis)))

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        return coordinates_in(v, self)

    def complement_basis(self) -> List[Vector]:
        """Standard unit vectors on the non-pivot columns."""
        pset = set(self.pivots)
        out = []
        for j in range(self.ambient_dim):
            if j not in pset:
                out.append(tuple(ONE if k == j else ZERO for k in range(self.ambient_dim)))
        return out

    def copy_echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        e.rows = {p: dict(r) for p, r in self._ech.rows.items()}
        return e

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(m: Matrix) -> Subspace:
    """Right null space ``{x : m x = 0}``."""
    e = Echelon(m.ncols)
    for r in m.data:
        e.add(_sparse(r))
    return Subspace.span(m.ncols, e.null_space())


# Integer form of a row: (den, {col: (re, im)}) with Gaussian-integer numerators
# and a positive integer denominator.  Used for large systems, where the object
# overhead of GaussianRational dominates.
IntRow = Tuple[int, Dict[int, Tuple[int, int]]]


def _to_int_row(row: SparseRow) -> IntRow:
    den = 1
    for v in row.values():
        d = v._den
        den = den * d // gcd(den, d)
    return den, {k: (v._re * (den // v._den), v._im * (den // v._den)) for k, v in row.items() if v}


def _primitive(den: int, num: Dict[int, Tuple[int, int]]) -> IntRow:
    g = gcd(den, *(x for a, b in num.values() for x in (a, b)))
    if g > 1:
        den //= g
        num = {k: (a // g, b // g) for k, (a, b) in num.items()}
    return den, num


def _axpy_int(acc: Dict[int, Tuple[int, int]], a: int, b: int, num: Dict[int, Tuple[int, int]]) -> None:
    """``acc -= (a + b i) * num`` in place."""
    for k, (x, y) in num.items():
        re = a * x - b * y
        im = a * y + b * x
        old = acc.get(k)
        if old is None:
            acc[k] = (-re, -im)
        else:
            u, v = old[0] - re, old[1] - im
            if u or v:
                acc[k] = (u, v)
            else:
                del acc[k]


class _IntEchelon:
    """Fully reduced echelon form in integer form; pivot entries equal the row denominator."""

    def __init__(self, ncols: int) -> None:
        self.ncols = ncols
        self.rows: Dict[int, IntRow] = {}

    def reduce(self, row: IntRow) -> IntRow:
        d_r, n_r = row
        rows = self.rows
        piv = [c for c in n_r if c in rows]
        if not piv:
            return row
        D = 1
        for c in piv:
            dc = rows[c][0]
            D = D * dc // gcd(D, dc)
        acc = {k: (a * D, b * D) for k, (a, b) in n_r.items()}
        for c in piv:
            a, b = n_r[c]
            dc, nc = rows[c]
            s = D // dc
            _axpy_int(acc, a * s, b * s, nc)
        if not acc:
            return 1, {}
        return _primitive(d_r * D, acc)

    def add(self, row: IntRow) -> Optional[int]:
        _, num = self.reduce(row)
        if not num:
            return None
        p = min(num)
        # multiply by the conjugate of the pivot entry so it becomes a positive integer
        a, b = num[p]
        num = {k: (x * a + y * b, y * a - x * b) for k, (x, y) in num.items()}
        d, num = _primitive(a * a + b * b, num)
        for q, (dq, nq) in list(self.rows.items()):
            if q > p or p not in nq:
                continue
            a, b = nq[p]
            acc = {k: (x * d, y * d) for k, (x, y) in nq.items()}
            _axpy_int(acc, a, b, num)
            self.rows[q] = _primitive(dq * d, acc)
        self.rows[p] = (d, num)
        return p

    def to_echelon(self) -> Echelon:
        e = Echelon(self.ncols)
        for p in sorted(self.rows):
            d, num = self.rows[p]
            e.rows[p] = {k: GaussianRational._raw(a, b, d) for k, (a, b) in num.items()}
        return e


def echelon_of_rows(ncols: int, rows: Iterable[SparseRow]) -> Echelon:
    """RREF of a sparse system, eliminated over the Gaussian integers."""
    ie = _IntEchelon(ncols)
    for r in rows:
        if r:
            ie.add(_to_int_row(r))
    return ie.to_echelon()


def kernel_of_rows(ncols: int, rows: Iterable[SparseRow]) -> Tuple[Subspace, int]:
    """Null space of a sparse system; also returns its rank."""
    e = echelon_of_rows(ncols, rows)
    return Subspace.span(ncols, e.null_space()), e.rank


def extend_to_basis(inner: Subspace, outer: Subspace) -> List[Vector]:
    """Vectors of ``outer``'s basis that complete ``inner`` to a basis of ``outer``.

    Greedy over ``outer``'s RREF basis in order, so the selection is canonical.
    """
    if inner.ambient_dim != outer.ambient_dim:
        raise LinalgError("subspaces live in different ambient spaces")
    for b in inner.basis:
        if not outer.contains(b):
            raise ContainmentError(b)
    e = inner.copy_echelon()
    added = []
    for b in outer.basis:
        if e.add(_sparse(b)) is not None:
            added.append(b)
    return added


def coordinates_in(v: Sequence, s: Subspace) -> Optional[Vector]:
    """Coefficients of ``v`` in the RREF basis of ``s``; None when ``v`` is outside."""
    v = _vec(v)
    if len(v) != s.ambient_dim:
        raise LinalgError("vector length does not match the ambient dimension")
    basis = s.basis
    coeffs = tuple(v[p] for p in s.pivots)
    recon = [ZERO] * s.ambient_dim
    for c, b in zip(coeffs, basis):
        if c:
            for k, x in enumerate(b):
                if x:
                    recon[k] = recon[k] + c * x
    if tuple(recon) != v:
        return None
    return coeffs


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution of ``m x = b`` (free variables set to zero), or None."""
    b = _vec(b)
    aug = Matrix([list(r) + [bi] for r, bi in zip(m.data, b)], m.ncols + 1)
    red, piv, rk = rref(aug)
    if m.ncols in piv:
        return None
    x = [ZERO] * m.ncols
    for i, p in enumerate(piv):
        x[p] = red[i, m.ncols]
    return tuple(x)
