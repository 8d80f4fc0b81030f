"""Right modules, matrix embeddings and the semidirect sum ``L + V``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .algebra import Algebra, AlgebraError, Defect, _axpy, _clean, _dense, is_lie
from .linalg import Matrix, rank
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "ModuleError",
    "RightModule",
    "MatrixEmbedding",
    "BimoduleDefect",
    "right_module_defects",
    "leibniz_bimodule_defects",
    "adjoint_actions",
    "semidirect",
    "embedding_defects",
    "embedding_is_injective",
    "action_from_embedding",
    "fock_module",
    "fock_degree",
]

Sparse = Dict[int, GaussianRational]


class ModuleError(ValueError):
    pass


class RightModule:
    """Action ``(v_p, e_j) = sum_q A[p][j][q] v_q`` of ``base`` on a vector space."""

    __slots__ = ("name", "base", "labels", "_act")

    def __init__(
        self,
        name: str,
        base: Algebra,
        labels: Sequence[str],
        action: Mapping[Tuple[int, int], Mapping[int, object]],
    ) -> None:
        self.name = name
        self.base = base
        self.labels = tuple(labels)
        m, n = len(self.labels), base.dim
        act = {}
        for (p, j), vec in action.items():
            if not (0 <= p < m and 0 <= j < n) or any(not 0 <= q < m for q in vec):
                raise ModuleError(f"action index out of range in {name}")
            v = _clean(vec)
            if v:
                act[(p, j)] = v
        self._act = act

    @classmethod
    def from_table(
        cls,
        name: str,
        base: Algebra,
        labels: Sequence[str],
        table: Mapping[Tuple[str, str], Mapping[str, object]],
    ) -> "RightModule":
        idx = {lbl: k for k, lbl in enumerate(labels)}
        act = {}
        for (v, x), vec in table.items():
            key = (idx[v], base.index(x))
            if key in act:
                raise ModuleError(f"action ({v},{x}) given twice")
            act[key] = {idx[w]: as_scalar(c) for w, c in vec.items()}
        return cls(name, base, labels, act)

    @property
    def mdim(self) -> int:
        return len(self.labels)

    def act(self, p: int, j: int) -> Sparse:
        return self._act.get((p, j), _EMPTY)

    def act_sparse(self, vec: Mapping[int, GaussianRational], j: int) -> Sparse:
        out: Sparse = {}
        for p, c in vec.items():
            a = self._act.get((p, j))
            if a:
                _axpy(out, c, a)
        return out

    def actions(self) -> Dict[Tuple[int, int], Sparse]:
        return {k: dict(v) for k, v in sorted(self._act.items())}

    def tensor(self):
        m, n = self.mdim, self.base.dim
        return tuple(tuple(_dense(self.act(p, j), m) for j in range(n)) for p in range(m))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ModuleError(f"{self.name} has no basis element {label!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RightModule):
            return NotImplemented
        return (
            self.name == other.name
            and self.labels == other.labels
            and self.base.same_table(other.base)
            and self._act == other._act
        )

    def __hash__(self) -> int:
        return hash((self.name, self.labels))

    def __repr__(self) -> str:
        return f"RightModule({self.name!r}, mdim={self.mdim}, over={self.base.name!r})"


_EMPTY: Sparse = {}


def right_module_defects(
    lie: Algebra, mod: RightModule, module_indices: Optional[Iterable[int]] = None
) -> List[Defect]:
    """Triples ``(p, j, k)`` where ``(v,[x,y]) - ((v,x),y) + ((v,y),x)`` is nonzero.

    Here ``v = v_p, x = e_j, y = e_k``.  ``module_indices`` limits ``p``.
    """
    if not mod.base.same_table(lie) or mod.base.labels != lie.labels:
        raise ModuleError(f"module {mod.name} is not over {lie.name}")
    if not is_lie(lie):
        raise ModuleError(f"{lie.name} is not a Lie algebra")
    n, m = lie.dim, mod.mdim
    ps = range(m) if module_indices is None else module_indices
    one = as_scalar(1)
    out = []
    for p in ps:
        for j in range(n):
            vj = mod.act(p, j)
            for k in range(n):
                d: Sparse = {}
                for l, c in lie.product(j, k).items():
                    a = mod.act(p, l)
                    if a:
                        _axpy(d, c, a)
                _axpy(d, -one, mod.act_sparse(vj, k))
                _axpy(d, one, mod.act_sparse(mod.act(p, k), j))
                if d:
                    out.append(Defect(p, j, k, _dense(d, m)))
    return out


class BimoduleDefect(NamedTuple):
    axiom: int  # 1: [m,[x,y]]  2: [x,[m,y]]  3: [x,[y,m]]
    m: int
    x: int
    y: int
    value: Tuple[GaussianRational, ...]


def _tensor_to_sparse(t, outer: int, inner: int) -> Dict[Tuple[int, int], Sparse]:
    out = {}
    for a in range(outer):
        for b in range(inner):
            v = {q: as_scalar(c) for q, c in enumerate(t[a][b]) if c}
            if v:
                out[(a, b)] = v
    return out


def adjoint_actions(a: Algebra):
    """Left and right actions of ``a`` on itself as dense tensors ``(L[x][m], R[m][x])``."""
    C = a.structure()
    n = a.dim
    left = tuple(tuple(C[x][m] for m in range(n)) for x in range(n))
    right = tuple(tuple(C[m][x] for x in range(n)) for m in range(n))
    return left, right


def leibniz_bimodule_defects(a: Algebra, left, right) -> List[BimoduleDefect]:
    """Check the three Leibniz-module axioms on basis triples.

    ``left[x][m]`` is ``[e_x, v_m]`` and ``right[m][x]`` is ``[v_m, e_x]``, both
    as coordinate vectors in the module; ``None`` means the zero action.
    """
    n = a.dim
    if right is None and left is None:
        return []
    mdim = len(right) if right is not None else (len(left[0]) if n else 0)
    if right is None:
        right = [[[ZERO] * mdim for _ in range(n)] for _ in range(mdim)]
    if left is None:
        left = [[[ZERO] * mdim for _ in range(mdim)] for _ in range(n)]
    if len(right) != mdim or any(len(r) != n for r in right) or len(left) != n or any(len(r) != mdim for r in left):
        raise ModuleError("action tensors have inconsistent shapes")
    R = _tensor_to_sparse(right, mdim, n)
    L = _tensor_to_sparse(left, n, mdim)
    one = as_scalar(1)

    def r_act(vec: Sparse, x: int) -> Sparse:
        out: Sparse = {}
        for m_, c in vec.items():
            v = R.get((m_, x))
            if v:
                _axpy(out, c, v)
        return out

    def l_act(x: int, vec: Sparse) -> Sparse:
        out: Sparse = {}
        for m_, c in vec.items():
            v = L.get((x, m_))
            if v:
                _axpy(out, c, v)
        return out

    def r_by(vec_m: Sparse, alg_vec: Sparse) -> Sparse:
        out: Sparse = {}
        for x, c in alg_vec.items():
            _axpy(out, c, r_act(vec_m, x))
        return out

    def l_by(alg_vec: Sparse, vec_m: Sparse) -> Sparse:
        out: Sparse = {}
        for x, c in alg_vec.items():
            _axpy(out, c, l_act(x, vec_m))
        return out

    out = []
    for m_ in range(mdim):
        vm = {m_: one}
        for x in range(n):
            for y in range(n):
                xy = a.product(x, y)
                # [m,[x,y]] = [[m,x],y] - [[m,y],x]
                d = r_by(vm, xy)
                _axpy(d, -one, r_act(r_act(vm, x), y))
                _axpy(d, one, r_act(r_act(vm, y), x))
                if d:
                    out.append(BimoduleDefect(1, m_, x, y, _dense(d, mdim)))
                # [x,[m,y]] = [[x,m],y] - [[x,y],m]
                d = l_act(x, r_act(vm, y))
                _axpy(d, -one, r_act(l_act(x, vm), y))
                _axpy(d, one, l_by(xy, vm))
                if d:
                    out.append(BimoduleDefect(2, m_, x, y, _dense(d, mdim)))
                # [x,[y,m]] = [[x,y],m] - [[x,m],y]
                d = l_act(x, l_act(y, vm))
                _axpy(d, -one, l_by(xy, vm))
                _axpy(d, one, r_act(l_act(x, vm), y))
                if d:
                    out.append(BimoduleDefect(3, m_, x, y, _dense(d, mdim)))
    return out


def semidirect(lie: Algebra, mod: RightModule, name: Optional[str] = None, check: bool = True) -> Algebra:
    """Leibniz algebra on ``lie + mod``: ``[v, x] = (v, x)``, ``[x, v] = 0``, ``[v, w] = 0``."""
    if check:
        bad = right_module_defects(lie, mod)
        if bad:
            p, j, k, _ = bad[0]
            raise ModuleError(
                f"{mod.name} is not a right {lie.name}-module; "
                f"axiom fails on ({mod.labels[p]}, {lie.labels[j]}, {lie.labels[k]})"
            )
    n = lie.dim
    prod = {key: dict(v) for key, v in lie.products().items()}
    for (p, j), v in mod.actions().items():
        prod[(n + p, j)] = {n + q: c for q, c in v.items()}
    return Algebra(name or f"{lie.name}+{mod.name}", lie.labels + mod.labels, prod)


@dataclass(frozen=True)
class MatrixEmbedding:
    name: str
    domain: Algebra
    images: Tuple[Matrix, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.domain.dim:
            raise ModuleError("one image matrix per basis element is required")
        sizes = {m.shape for m in self.images}
        if len(sizes) > 1 or any(r != c for r, c in sizes):
            raise ModuleError("images must be square matrices of one size")

    @property
    def size(self) -> int:
        return self.images[0].nrows if self.images else 0

    def image(self, vec: Sequence) -> Matrix:
        k = self.size
        out = Matrix.zeros(k, k)
        for c, M in zip(vec, self.images):
            c = as_scalar(c)
            if c:
                out = out + M.scale(c)
        return out


def embedding_defects(e: MatrixEmbedding) -> List[Tuple[int, int, Matrix]]:
    """Pairs ``(i, j)`` with ``e(x_i)e(x_j) - e(x_j)e(x_i) - e([x_i,x_j]) != 0``."""
    dom = e.domain
    out = []
    for i in range(dom.dim):
        for j in range(dom.dim):
            Mi, Mj = e.images[i], e.images[j]
            br = dom.product(i, j)
            d = Mi @ Mj - Mj @ Mi - e.image(_dense(br, dom.dim))
            if not d.is_zero():
                out.append((i, j, d))
    return out


def embedding_is_injective(e: MatrixEmbedding) -> bool:
    stacked = Matrix([[x for r in M.data for x in r] for M in e.images])
    return rank(stacked) == e.domain.dim


def action_from_embedding(
    e: MatrixEmbedding, convention: str = "row", name: Optional[str] = None, labels: Optional[Sequence[str]] = None
) -> RightModule:
    """Module induced by an embedding.

    ``row``: coordinate row vector times matrix, ``(X_p, x) = sum_q M(x)[p][q] X_q``.
    ``column``: ``(X_p, x) = sum_q M(x)[q][p] X_q``.
    Only ``row`` turns a Lie homomorphism into a right module.
    """
    if convention not in ("row", "column"):
        raise ModuleError(f"unknown convention {convention!r}")
    k = e.size
    labels = labels or [f"X{p + 1}" for p in range(k)]
    act = {}
    for j, M in enumerate(e.images):
        for p in range(k):
            if convention == "row":
                v = {q: M[p, q] for q in range(k) if M[p, q]}
            else:
                v = {q: M[q, p] for q in range(k) if M[q, p]}
            if v:
                act[(p, j)] = v
    return RightModule(name or f"{e.name}-{convention}", e.domain, labels, act)


def fock_degree(label: str) -> Optional[int]:
    """Polynomial degree of a Fock basis label ``x<t>``; None for the other labels."""
    if label.startswith("x") and label[1:].isdigit():
        return int(label[1:])
    return None


def fock_module(N: int, base: Optional[Algebra] = None) -> RightModule:
    """Polynomials of degree <= N with ``(x^t, T) = x^t``, ``(x^t, P1) = x^(t+1)``,
    ``(x^t, P2) = t x^(t-1)``, ``(x^t, J) = -t x^t``; ``x^N * P1`` is truncated to 0.

    ``base`` defaults to the complex Diamond algebra with ``[J,P1]=P1``, ``[J,P2]=-P2``,
    ``[P1,P2]=T`` (basis ``J, P1, P2, T``).
    """
    if not isinstance(N, int) or N < 2:
        raise ModuleError("Fock truncation degree must be an integer >= 2")
    if base is None:
        from .catalog import diamond_complex_13

        base = diamond_complex_13()
    J, P1, P2, T = (base.index(x) for x in ("J", "P1", "P2", "T"))
    act = {}
    for t in range(N + 1):
        act[(t, T)] = {t: ONE}
        if t < N:
            act[(t, P1)] = {t + 1: ONE}
        if t > 0:
            act[(t, P2)] = {t - 1: as_scalar(t)}
            act[(t, J)] = {t: as_scalar(-t)}
    return RightModule(f"fock-module({N})", base, [f"x{t}" for t in range(N + 1)], act)
