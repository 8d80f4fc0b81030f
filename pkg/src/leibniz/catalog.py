"""Named constructors for the Diamond-related algebras, modules and embeddings.

Basis orders follow the printed tables.  ASCII labels: ``Pp``/``Pm`` stand
for ``P+``/``P-``; the Heisenberg/Fock generators are ``one``, ``xbar``,
``dbar`` (d/dx) and ``ebar``; polynomial basis vectors are ``x0 .. xN``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import Algebra, leibniz_defects
from .cohomology import Cochain2
from .linalg import Matrix
from .modules import MatrixEmbedding, RightModule, embedding_defects, fock_degree, fock_module, right_module_defects
from .scalar import I, ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "CatalogError",
    "CatalogEntry",
    "build",
    "list_entries",
    "entry",
    "parse_params",
    "diamond_real",
    "diamond_complex_12",
    "diamond_complex_13",
    "heisenberg_h1",
    "algebra_L1",
    "algebra_L2",
    "L_family",
    "M_family",
    "fock_algebra",
    "fock_module",
    "fock_scoped_triples",
    "check_entry",
    "sl3_matrix",
    "sp4_matrix",
    "theorem5_transformation",
    "LISTED_COCYCLES",
    "INTEGRABLE_FAMILIES",
    "listed_cocycles",
    "family_directions",
]


class CatalogError(KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "catalog error"


_h = Fraction(1, 2)
_third = Fraction(1, 3)


def _s(x) -> GaussianRational:
    return as_scalar(x)


# Lie algebras -------------------------------------------------------------


def diamond_real() -> Algebra:
    """``[J,P1]=P2, [J,P2]=-P1, [P1,P2]=T`` completed antisymmetrically."""
    return Algebra.from_table(
        "diamond-real",
        ["J", "P1", "P2", "T"],
        {("J", "P1"): {"P2": 1}, ("J", "P2"): {"P1": -1}, ("P1", "P2"): {"T": 1}},
        antisymmetric=True,
        field_tag="rational",
    )


def diamond_complex_12() -> Algebra:
    """Complex Diamond algebra in the ``J, P+, P-, T`` basis: ``[J,P+]=iP+, [J,P-]=-iP-, [P+,P-]=2iT``."""
    return Algebra.from_table(
        "diamond-complex-12",
        ["J", "Pp", "Pm", "T"],
        {("J", "Pp"): {"Pp": I}, ("J", "Pm"): {"Pm": -I}, ("Pp", "Pm"): {"T": 2 * I}},
        antisymmetric=True,
    )


def diamond_complex_13() -> Algebra:
    """``[J,P1]=P1, [J,P2]=-P2, [P1,P2]=T``."""
    return Algebra.from_table(
        "diamond-complex-13",
        ["J", "P1", "P2", "T"],
        {("J", "P1"): {"P1": 1}, ("J", "P2"): {"P2": -1}, ("P1", "P2"): {"T": 1}},
        antisymmetric=True,
        field_tag="gaussian",
    )


def heisenberg_h1() -> Algebra:
    return Algebra.from_table(
        "heisenberg-h1",
        ["one", "xbar", "dbar"],
        {("xbar", "dbar"): {"one": 1}},
        antisymmetric=True,
        field_tag="rational",
    )


_DC12_LIE = {
    ("J", "Pp"): {"Pp": I},
    ("Pp", "J"): {"Pp": -I},
    ("J", "Pm"): {"Pm": -I},
    ("Pm", "J"): {"Pm": I},
    ("Pp", "Pm"): {"T": 2 * I},
    ("Pm", "Pp"): {"T": -2 * I},
}


def algebra_L1() -> Algebra:
    t = dict(_DC12_LIE)
    t.update(
        {
            ("X1", "J"): {"X1": Fraction(2, 3) * I},
            ("X2", "J"): {"X2": -_third * I},
            ("X3", "J"): {"X3": -_third * I},
            ("X1", "Pp"): {"X2": 1},
            ("X3", "Pm"): {"X1": 1},
            ("X3", "T"): {"X2": _h * I},
        }
    )
    return Algebra.from_table("L1", ["J", "Pp", "Pm", "T", "X1", "X2", "X3"], t)


def algebra_L2() -> Algebra:
    t = dict(_DC12_LIE)
    t.update(
        {
            ("X1", "J"): {"X1": _third * I},
            ("X2", "J"): {"X2": Fraction(-2, 3) * I},
            ("X3", "J"): {"X3": _third * I},
            ("X1", "Pp"): {"X2": 1},
            ("X2", "Pm"): {"X3": 1},
            ("X1", "T"): {"X3": -_h * I},
        }
    )
    return Algebra.from_table("L2", ["J", "Pp", "Pm", "T", "X1", "X2", "X3"], t)


def L_family(alpha1=0, alpha2=0, name: Optional[str] = None) -> Algebra:
    a1, a2 = _s(alpha1), _s(alpha2)
    t = {
        ("J", "P1"): {"P2": 1},
        ("P1", "J"): {"P2": -1},
        ("J", "P2"): {"P1": -1},
        ("P2", "J"): {"P1": 1},
        ("P1", "P2"): {"T": 1},
        ("P2", "P1"): {"T": -1},
        ("J", "J"): {"X4": a1},
        ("P1", "P1"): {"X1": a2},
        ("P2", "P2"): {"X1": a2},
        ("J", "T"): {"X1": 2 * a2},
        ("P1", "T"): {"X3": -2 * a2},
        ("T", "P1"): {"X3": 3 * a2},
        ("P2", "T"): {"X2": 2 * a2},
        ("T", "P2"): {"X2": -3 * a2},
        ("X1", "P1"): {"X2": 1},
        ("X1", "P2"): {"X3": 1},
        ("X1", "T"): {"X4": 2},
        ("X2", "J"): {"X3": -1},
        ("X2", "P2"): {"X4": 1},
        ("X3", "J"): {"X2": 1},
        ("X3", "P1"): {"X4": -1},
    }
    if name is None:
        name = f"L({a1},{a2})"
    tag = "rational" if a1.is_real() and a2.is_real() else "gaussian"
    return Algebra.from_table(name, ["J", "P1", "P2", "T", "X1", "X2", "X3", "X4"], t, field_tag=tag)


def M_family(alpha=0, name: Optional[str] = None) -> Algebra:
    a = _s(alpha)
    t = dict(_DC12_LIE)
    t.update(
        {
            ("J", "J"): {"X2": a},
            ("X1", "J"): {"X1": I},
            ("X4", "J"): {"X4": -I},
            ("X1", "Pp"): {"X2": 1},
            ("X3", "Pm"): {"X1": 1},
            ("X4", "Pm"): {"X2": -1},
            ("X3", "T"): {"X2": _h * I},
        }
    )
    return Algebra.from_table(name or f"M({a})", ["J", "Pp", "Pm", "T", "X1", "X2", "X3", "X4"], t)


def fock_algebra(N: int) -> Algebra:
    """Truncated Leibniz algebra of the Fock module: ``one, xbar, dbar, ebar, x0..xN``.

    Products that would reach degree ``N + 1`` are dropped, so the Leibniz
    identity holds only on triples of polynomial degree ``<= N - 2``.
    """
    if not isinstance(N, int) or N < 2:
        raise CatalogError("fock-algebra needs an integer degree N >= 2")
    labels = ["one", "xbar", "dbar", "ebar"] + [f"x{t}" for t in range(N + 1)]
    t = {
        ("ebar", "xbar"): {"xbar": 1},
        ("xbar", "ebar"): {"xbar": -1},
        ("ebar", "dbar"): {"dbar": -1},
        ("dbar", "ebar"): {"dbar": 1},
        ("xbar", "dbar"): {"one": 1},
        ("dbar", "xbar"): {"one": -1},
    }
    for d in range(N + 1):
        x = f"x{d}"
        t[(x, "one")] = {x: 1}
        if d < N:
            t[(x, "xbar")] = {f"x{d + 1}": 1}
        if d > 0:
            t[(x, "dbar")] = {f"x{d - 1}": d}
            t[(x, "ebar")] = {x: -d}
    return Algebra.from_table(f"fock-algebra({N})", labels, t, field_tag="gaussian")


def fock_scoped_triples(a: Algebra) -> List[Tuple[int, int, int]]:
    """Triples whose polynomial basis elements all have degree ``<= N - 2``."""
    degs = [fock_degree(lbl) for lbl in a.labels]
    top = max(d for d in degs if d is not None)
    keep = [k for k, d in enumerate(degs) if d is None or d <= top - 2]
    return [(x, y, z) for x in keep for y in keep for z in keep]


def check_entry(obj) -> list:
    """Defects of a catalog object under its kind's validity check (Fock scoped)."""
    if isinstance(obj, Algebra):
        if obj.name.startswith("fock-algebra"):
            return leibniz_defects(obj, fock_scoped_triples(obj))
        return leibniz_defects(obj)
    if isinstance(obj, RightModule):
        if obj.name.startswith("fock-module"):
            return right_module_defects(obj.base, obj, range(obj.mdim - 2))
        return right_module_defects(obj.base, obj)
    if isinstance(obj, MatrixEmbedding):
        return embedding_defects(obj)
    raise CatalogError(f"no validity check for {type(obj).__name__}")


# modules ------------------------------------------------------------------


def sl3module1() -> RightModule:
    return RightModule.from_table(
        "sl3module1",
        diamond_complex_12(),
        ["X1", "X2", "X3"],
        {
            ("X1", "J"): {"X1": Fraction(2, 3) * I},
            ("X2", "J"): {"X2": -_third * I},
            ("X3", "J"): {"X3": -_third * I},
            ("X1", "Pp"): {"X2": 1},
            ("X3", "Pm"): {"X1": 1},
            ("X3", "T"): {"X2": _h * I},
        },
    )


def sl3module2() -> RightModule:
    return RightModule.from_table(
        "sl3module2",
        diamond_complex_12(),
        ["X1", "X2", "X3"],
        {
            ("X1", "J"): {"X1": _third * I},
            ("X2", "J"): {"X2": Fraction(-2, 3) * I},
            ("X3", "J"): {"X3": _third * I},
            ("X1", "Pp"): {"X2": 1},
            ("X2", "Pm"): {"X3": 1},
            ("X1", "T"): {"X3": -_h * I},
        },
    )


def sp4R_module() -> RightModule:
    return RightModule.from_table(
        "sp4R",
        diamond_real(),
        ["X1", "X2", "X3", "X4"],
        {
            ("X1", "P1"): {"X2": 1},
            ("X1", "P2"): {"X3": 1},
            ("X1", "T"): {"X4": 2},
            ("X2", "J"): {"X3": -1},
            ("X2", "P2"): {"X4": 1},
            ("X3", "J"): {"X2": 1},
            ("X3", "P1"): {"X4": -1},
        },
    )


def sp4C_module() -> RightModule:
    return RightModule.from_table(
        "sp4C",
        diamond_complex_12(),
        ["X1", "X2", "X3", "X4"],
        {
            ("X1", "J"): {"X1": I},
            ("X4", "J"): {"X4": -I},
            ("X1", "Pp"): {"X2": 1},
            ("X3", "Pm"): {"X1": 1},
            ("X4", "Pm"): {"X2": -1},
            ("X3", "T"): {"X2": _h * I},
        },
    )


# matrix realizations -------------------------------------------------------


def sl3_matrix(a=0, b=0, c=0, d=0, e=0, f=0, g=0, h=0) -> Matrix:
    """``aH1 + bH2 + cE1 + dE2 + eE12 + fF1 + gF2 + hF12`` in sl(3)."""
    a, b, c, d, e, f, g, h = map(_s, (a, b, c, d, e, f, g, h))
    return Matrix([[a, c, e], [f, b - a, d], [h, g, -b]])


SL3 = {
    "H1": sl3_matrix(a=1),
    "H2": sl3_matrix(b=1),
    "E1": sl3_matrix(c=1),
    "E2": sl3_matrix(d=1),
    "E12": sl3_matrix(e=1),
    "F1": sl3_matrix(f=1),
    "F2": sl3_matrix(g=1),
    "F12": sl3_matrix(h=1),
}


def sp4_matrix(a=0, b=0, c=0, d=0, e=0, f=0, g=0, h=0, i=0, j=0) -> Matrix:
    """``aH1 + bH2 + cE1 + dE2 + eE12 + fE112 + gF1 + hF2 + iF12 + jF112`` in sp(4)."""
    a, b, c, d, e, f, g, h, i, j = map(_s, (a, b, c, d, e, f, g, h, i, j))
    return Matrix([[a, c, e, -f], [g, b - a, d, -e], [i, h, a - b, ZERO], [-j, -i, ZERO, -a]])


SP4 = {
    "H1": sp4_matrix(a=1),
    "H2": sp4_matrix(b=1),
    "E1": sp4_matrix(c=1),
    "E2": sp4_matrix(d=1),
    "E12": sp4_matrix(e=1),
    "E112": sp4_matrix(f=1),
    "F1": sp4_matrix(g=1),
    "F2": sp4_matrix(h=1),
    "F12": sp4_matrix(i=1),
    "F112": sp4_matrix(j=1),
}


def _theta(theta=0, alpha=0, beta=0, gamma=0) -> Matrix:
    """Image of ``theta J + alpha P1 + beta P2 + gamma T`` in sp(4, R)."""
    t, a, b, g = map(_s, (theta, alpha, beta, gamma))
    return Matrix([[ZERO, a, b, 2 * g], [ZERO, ZERO, -t, b], [ZERO, t, ZERO, -a], [ZERO, ZERO, ZERO, ZERO]])


def sl3_phi() -> MatrixEmbedding:
    """``P+ -> E1, P- -> F12, J -> (i/3)(2H1 + H2), T -> (i/2)F2``."""
    J = (SL3["H1"].scale(2) + SL3["H2"]).scale(I / 3)
    return MatrixEmbedding("sl3-phi", diamond_complex_12(), (J, SL3["E1"], SL3["F12"], SL3["F2"].scale(I / 2)))


def sl3_psi() -> MatrixEmbedding:
    """``P+ -> E1, P- -> E2, J -> (i/3)(H1 - H2), T -> -(i/2)E12``."""
    J = (SL3["H1"] - SL3["H2"]).scale(I / 3)
    return MatrixEmbedding("sl3-psi", diamond_complex_12(), (J, SL3["E1"], SL3["E2"], SL3["E12"].scale(-I / 2)))


def sl3_psi_misprint() -> MatrixEmbedding:
    """``psi`` with ``T -> -(i/2)F12`` (negative test only)."""
    J = (SL3["H1"] - SL3["H2"]).scale(I / 3)
    return MatrixEmbedding(
        "sl3-psi-misprint", diamond_complex_12(), (J, SL3["E1"], SL3["E2"], SL3["F12"].scale(-I / 2))
    )


def sp4r_theta() -> MatrixEmbedding:
    return MatrixEmbedding(
        "sp4r-theta",
        diamond_real(),
        (_theta(theta=1), _theta(alpha=1), _theta(beta=1), _theta(gamma=1)),
    )


def sp4c_eta() -> MatrixEmbedding:
    """``P+ -> E1, P- -> F12, J -> i(H1 + H2), T -> (i/2)F2``."""
    J = (SP4["H1"] + SP4["H2"]).scale(I)
    return MatrixEmbedding("sp4c-eta", diamond_complex_12(), (J, SP4["E1"], SP4["F12"], SP4["F2"].scale(I / 2)))


def sp4c_eta_misprint() -> MatrixEmbedding:
    """``eta`` with ``T -> iF2`` (negative test only)."""
    J = (SP4["H1"] + SP4["H2"]).scale(I)
    return MatrixEmbedding(
        "sp4c-eta-misprint", diamond_complex_12(), (J, SP4["E1"], SP4["F12"], SP4["F2"].scale(I))
    )


def theorem5_transformation(a: Algebra, B2, B3, C1, A1=1) -> Matrix:
    """Basis change of an ``L(a1, a2)`` generated by ``J' = A1 J``, ``P1' = B2 P1 + B3 P2``, ``X1' = C1 X1``.

    The remaining vectors are the brackets ``P2' = [J',P1']``,
    ``T' = [P1',P2']``, ``X2' = [X1',P1']``, ``X3' = [X1',P2']`` and
    ``X4' = [X2',P2']`` taken in ``a``.  Columns of the result are the new
    basis vectors in old coordinates.
    """
    from .algebra import bracket

    A1, B2, B3, C1 = map(_s, (A1, B2, B3, C1))
    J = a.vector({"J": A1})
    P1 = a.vector({"P1": B2, "P2": B3})
    X1 = a.vector({"X1": C1})
    P2 = bracket(a, J, P1)
    T = bracket(a, P1, P2)
    X2 = bracket(a, X1, P1)
    X3 = bracket(a, X1, P2)
    X4 = bracket(a, X2, P2)
    return Matrix.from_columns([J, P1, P2, T, X1, X2, X3, X4])


# listed cocycles and their integrable families ------------------------------

_COCYCLE_TABLES: Dict[str, Dict[str, Dict[Tuple[str, str], Dict[str, object]]]] = {
    "L1": {
        "phi1": {("X1", "J"): {"X1": 1}, ("X2", "J"): {"X2": 1}, ("X3", "J"): {"X3": 1}},
        "phi2": {
            ("Pm", "Pp"): {"J": 1},
            ("Pp", "Pm"): {"J": -1},
            ("X2", "Pm"): {"X1": -_h * I},
            ("X1", "T"): {"X1": Fraction(1, 12)},
            ("X2", "T"): {"X2": Fraction(1, 12)},
            ("X3", "T"): {"X3": Fraction(-1, 6)},
        },
        "phi3": {
            ("T", "Pp"): {"Pp": 1},
            ("T", "Pm"): {"Pm": -1},
            ("X2", "Pm"): {"X1": I},
            ("Pp", "T"): {"Pp": -1},
            ("Pm", "T"): {"Pm": 1},
            ("X1", "T"): {"X1": _h},
            ("X2", "T"): {"X2": -_h},
        },
    },
    "L2": {
        "phi1": {("X1", "J"): {"X1": 1}, ("X2", "J"): {"X2": 1}, ("X3", "J"): {"X3": 1}},
        "phi2": {
            ("Pp", "Pm"): {"J": -1},
            ("Pm", "Pp"): {"J": 1},
            ("X2", "Pm"): {"X1": -_h * I},
            ("X1", "T"): {"X1": Fraction(1, 12)},
            ("X2", "T"): {"X2": Fraction(-1, 12)},
            ("X3", "T"): {"X3": Fraction(1, 6)},
        },
        "phi3": {
            ("Pp", "T"): {"Pp": -1},
            ("T", "Pp"): {"Pp": 1},
            ("Pm", "T"): {"Pm": 1},
            ("T", "Pm"): {"Pm": -1},
            ("X2", "Pm"): {"X1": I},
            ("X1", "T"): {"X1": _h},
            ("X2", "T"): {"X2": -_h},
        },
    },
    "L(1,0)": {
        "phi": {
            ("P1", "P1"): {"X1": 1},
            ("T", "P1"): {"X3": 3},
            ("P2", "P2"): {"X1": 1},
            ("T", "P2"): {"X2": -3},
            ("J", "T"): {"X1": 2},
            ("P1", "T"): {"X3": -2},
            ("P2", "T"): {"X2": 2},
        },
    },
    "L(0,1)": {"phi": {("J", "J"): {"X4": 1}}},
    "L(0,0)": {
        "phi1": {("J", "J"): {"X4": 1}},
        "phi2": {
            ("P2", "J"): {"P2": 1},
            ("T", "J"): {"T": 1},
            ("X3", "J"): {"X3": 1},
            ("X4", "J"): {"X4": 1},
            ("J", "P2"): {"P2": -1},
            ("J", "T"): {"T": -1},
        },
        # the printed "phi3([X4, J) = X4" is read as phi3(X4, J) = X4
        "phi3": {
            ("X1", "J"): {"X1": 1},
            ("X3", "J"): {"X3": 2},
            ("X4", "J"): {"X4": 1},
            ("X1", "P2"): {"X2": 1},
            ("X3", "P2"): {"X4": -1},
        },
        "phi4": {
            ("P1", "P1"): {"X1": 1},
            ("T", "P1"): {"X3": 3},
            ("P2", "P2"): {"X1": 1},
            ("T", "P2"): {"X2": -3},
            ("J", "T"): {"X1": 2},
            ("P1", "T"): {"X3": -2},
            ("P2", "T"): {"X2": 2},
        },
        "phi5": {
            ("P2", "P1"): {"J": 1},
            ("X2", "P1"): {"X1": Fraction(1, 4)},
            ("X4", "P1"): {"X3": Fraction(-1, 4)},
            ("P1", "P2"): {"J": -1},
            ("X3", "P2"): {"X1": Fraction(1, 4)},
            ("X4", "P2"): {"X2": Fraction(1, 4)},
            ("X2", "T"): {"X3": -_h},
            ("X3", "T"): {"X2": _h},
        },
        "phi6": {
            ("T", "P1"): {"P2": 1},
            ("X2", "P1"): {"X1": Fraction(-1, 4)},
            ("X4", "P1"): {"X3": Fraction(1, 4)},
            ("T", "P2"): {"P1": -1},
            ("X3", "P2"): {"X1": Fraction(-1, 4)},
            ("X4", "P2"): {"X2": Fraction(-1, 4)},
            ("P1", "T"): {"P2": -1},
            ("P2", "T"): {"P1": 1},
            ("X2", "T"): {"X3": -_h},
            ("X3", "T"): {"X2": _h},
        },
        "phi7": {
            ("P1", "X1"): {"P1": 1},
            ("P2", "X1"): {"P2": 1},
            ("T", "X1"): {"T": 2},
            ("X2", "X1"): {"X2": 1},
            ("X3", "X1"): {"X3": 1},
            ("X4", "X1"): {"X4": 2},
            ("J", "X2"): {"P2": -1},
            ("P2", "X2"): {"T": 1},
            ("X1", "X2"): {"X2": -1},
            ("X3", "X2"): {"X4": 1},
            ("J", "X3"): {"P1": 1},
            ("P1", "X3"): {"T": -1},
            ("X1", "X3"): {"X3": -1},
            ("X2", "X3"): {"X4": -1},
            ("X1", "X4"): {"X4": -2},
        },
    },
    "M1": {
        "phi1": {("X3", "Pp"): {"X4": 1}, ("X3", "T"): {"X2": _h * I}},
        "phi2": {
            ("Pp", "J"): {"Pp": 1},
            ("T", "J"): {"T": 1},
            ("X2", "J"): {"X2": 1},
            ("X4", "J"): {"X4": 1},
            ("J", "Pp"): {"Pp": -1},
            ("J", "T"): {"T": -1},
        },
        "phi3": {
            ("Pm", "J"): {"Pm": 1},
            ("T", "J"): {"T": 1},
            ("X3", "J"): {"X3": -1},
            ("X4", "J"): {"X4": -1},
            ("J", "Pm"): {"Pm": -1},
            ("J", "T"): {"T": -1},
        },
        # printed with a stray "phi5(X3, J) = X3" inside phi4; read as phi4
        "phi4": {("X1", "J"): {"X1": 1}, ("X2", "J"): {"X2": 1}, ("X3", "J"): {"X3": 1}, ("X4", "J"): {"X4": 1}},
    },
    "M2": {
        "phi1": {("J", "J"): {"X2": 1}},
        "phi2": {("J", "X3"): {"X2": 1}},
        "phi3": {("X3", "Pp"): {"X4": 1}, ("X3", "T"): {"X2": _h * I}},
        "phi4": {
            ("Pm", "Pp"): {"J": 1},
            ("Pp", "Pm"): {"J": -1},
            ("X2", "Pm"): {"X1": -_h * I},
            ("X4", "Pm"): {"X3": Fraction(-3, 2) * I},
            ("X1", "T"): {"X1": Fraction(1, 4)},
            ("X2", "T"): {"X2": Fraction(1, 4)},
            ("X4", "T"): {"X4": -_h},
        },
    },
}

# Which catalog algebra each listed family belongs to.  M1/M2 are tied to
# M(1)/M(0); the alternative assignment is checked in the tests.
LISTED_COCYCLES: Dict[str, str] = {
    "L1": "L1",
    "L2": "L2",
    "L(1,0)": "L(1,0)",
    "L(0,1)": "L(0,1)",
    "L(0,0)": "L(0,0)",
    "M1": "M(1)",
    "M2": "M(0)",
}

# Integrable families: each is a list of directions, a direction being
# {cocycle name: coefficient}.  Tied coefficients share one direction.
INTEGRABLE_FAMILIES: Dict[str, Dict[str, List[Dict[str, int]]]] = {
    "L1": {"mu1": [{"phi2": 1}, {"phi3": 1}], "mu2": [{"phi1": 1}, {"phi3": 1}]},
    "L2": {"mu": [{"phi1": 1}, {"phi3": 1}]},
    "L(1,0)": {"mu": [{"phi": 1}]},
    "L(0,1)": {"mu": [{"phi": 1}]},
    "L(0,0)": {
        "mu1": [{"phi1": 1}, {"phi2": 1}],
        "mu2": [{"phi1": 1}, {"phi2": 1, "phi3": -1}],
        "mu3": [{"phi1": 1}, {"phi4": 1}],
        "mu4": [{"phi5": 1, "phi6": 1}],
        "mu5": [{"phi7": 1}],
    },
    "M1": {"mu": [{"phi1": 1}, {"phi2": 1}, {"phi3": 1}, {"phi4": 1}]},
    "M2": {"mu1": [{"phi1": 1}, {"phi2": 1}, {"phi3": 1}], "mu2": [{"phi3": 1}, {"phi4": 1}]},
}


def listed_cocycles(key: str, base: Optional[Algebra] = None) -> List[Cochain2]:
    """The listed cocycles of ``key`` (e.g. ``"L1"``, ``"M2"``) over ``base``.

    ``base`` defaults to the catalog algebra in ``LISTED_COCYCLES``.
    """
    if key not in _COCYCLE_TABLES:
        raise CatalogError(f"no listed cocycles for {key!r}")
    if base is None:
        base = build(LISTED_COCYCLES[key])
    return [Cochain2.from_table(base, t, name=nm) for nm, t in _COCYCLE_TABLES[key].items()]


def family_directions(key: str, family: str) -> List[List[int]]:
    """Directions of a family as coefficient vectors over ``listed_cocycles(key)``."""
    names = list(_COCYCLE_TABLES[key])
    out = []
    for d in INTEGRABLE_FAMILIES[key][family]:
        out.append([d.get(nm, 0) for nm in names])
    return out


# registry -------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # algebra | module | embedding
    params: Tuple[Tuple[str, object], ...]
    provenance: str
    builder: Callable

    def signature(self) -> str:
        if not self.params:
            return ""
        return ", ".join(f"{k}={v}" for k, v in self.params)


def _entries() -> List[CatalogEntry]:
    E = CatalogEntry
    return [
        E("diamond-real", "algebra", (), "real Diamond algebra, basis J,P1,P2,T", lambda: diamond_real()),
        E("diamond-complex-12", "algebra", (), "complex Diamond algebra, basis J,P+,P-,T", lambda: diamond_complex_12()),
        E("diamond-complex-13", "algebra", (), "complex Diamond algebra after J'=-iJ, T'=2iT", lambda: diamond_complex_13()),
        E("heisenberg-h1", "algebra", (), "Heisenberg algebra H1 with [xbar,dbar]=one", lambda: heisenberg_h1()),
        E("L1", "algebra", (), "Leibniz algebra over D_C with I = sl3module1", lambda: algebra_L1()),
        E("L2", "algebra", (), "Leibniz algebra over D_C with I = sl3module2", lambda: algebra_L2()),
        E(
            "L-family",
            "algebra",
            (("alpha1", 0), ("alpha2", 0)),
            "family L(alpha1, alpha2) over D_R with I = sp4R",
            lambda alpha1=0, alpha2=0: L_family(alpha1, alpha2),
        ),
        E("L(1,0)", "algebra", (), "representative L(1,0)", lambda: L_family(1, 0, "L(1,0)")),
        E("L(1,1)", "algebra", (), "representative L(1,1)", lambda: L_family(1, 1, "L(1,1)")),
        E("L(-1,1)", "algebra", (), "representative L(-1,1)", lambda: L_family(-1, 1, "L(-1,1)")),
        E("L(0,0)", "algebra", (), "representative L(0,0)", lambda: L_family(0, 0, "L(0,0)")),
        E("L(0,1)", "algebra", (), "representative L(0,1)", lambda: L_family(0, 1, "L(0,1)")),
        E("M", "algebra", (("alpha", 0),), "family M(alpha) over D_C with I = sp4C", lambda alpha=0: M_family(alpha)),
        E("M(1)", "algebra", (), "representative M(1)", lambda: M_family(1, "M(1)")),
        E("M(0)", "algebra", (), "representative M(0)", lambda: M_family(0, "M(0)")),
        E("fock-module", "module", (("N", 4),), "Fock module over diamond-complex-13, truncated at x^N", lambda N=4: fock_module(N)),
        E("fock-algebra", "algebra", (("N", 4),), "Leibniz algebra of the truncated Fock module", lambda N=4: fock_algebra(N)),
        E("sl3module1", "module", (), "D_C-module from the sl(3) embedding phi", lambda: sl3module1()),
        E("sl3module2", "module", (), "D_C-module from the sl(3) embedding psi", lambda: sl3module2()),
        E("sp4R", "module", (), "D_R-module from the sp(4,R) realization", lambda: sp4R_module()),
        E("sp4C", "module", (), "D_C-module from the sp(4,C) embedding eta", lambda: sp4C_module()),
        E("sl3-phi", "embedding", (), "D_C -> sl(3,C), phi", lambda: sl3_phi()),
        E("sl3-psi", "embedding", (), "D_C -> sl(3,C), psi with T -> -(i/2)E12", lambda: sl3_psi()),
        E("sp4r-theta", "embedding", (), "D_R -> sp(4,R), theta", lambda: sp4r_theta()),
        E("sp4c-eta", "embedding", (), "D_C -> sp(4,C), eta with T -> (i/2)F2", lambda: sp4c_eta()),
        E("sl3-psi-misprint", "embedding", (), "psi with T -> -(i/2)F12 (fails)", lambda: sl3_psi_misprint()),
        E("sp4c-eta-misprint", "embedding", (), "eta with T -> iF2 (fails)", lambda: sp4c_eta_misprint()),
    ]


_REGISTRY: Dict[str, CatalogEntry] = {e.name: e for e in _entries()}


def list_entries() -> List[CatalogEntry]:
    return list(_REGISTRY.values())


def entry(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None


def parse_params(pairs: Sequence[str]) -> Dict[str, str]:
    out = {}
    for p in pairs:
        if "=" not in p:
            raise CatalogError(f"parameter {p!r} is not of the form key=value")
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def build(name: str, **params) -> Union[Algebra, RightModule, MatrixEmbedding]:
    """Construct a catalog object; parameter values may be scalars or scalar text."""
    e = entry(name)
    allowed = dict(e.params)
    extra = set(params) - set(allowed)
    if extra:
        raise CatalogError(f"{name} does not take parameter(s) {sorted(extra)}")
    kwargs = {}
    for k, default in allowed.items():
        v = params.get(k, default)
        if k == "N":
            try:
                v = int(v)
            except (TypeError, ValueError):
                raise CatalogError(f"{name}: N must be an integer") from None
        else:
            v = as_scalar(v)
        kwargs[k] = v
    return e.builder(**kwargs)
