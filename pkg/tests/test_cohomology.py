import random
import time

import pytest

from leibniz import catalog
from leibniz.algebra import Algebra, change_basis
from leibniz.cohomology import (
    Cochain2,
    CohomologyError,
    bl2_basis,
    coboundary_matrix,
    coboundary_of,
    cocycle_defects,
    hl2,
    linear_combination,
    reduce_mod_bl2,
    zl2_basis,
)
from leibniz.linalg import Matrix, kernel_basis, rank
from leibniz.scalar import ONE, ZERO, as_scalar

from conftest import cached_hl2, random_invertible

ALGEBRAS = [
    "diamond-real",
    "diamond-complex-12",
    "diamond-complex-13",
    "heisenberg-h1",
    "L1",
    "L2",
    "L(1,0)",
    "L(1,1)",
    "L(-1,1)",
    "L(0,0)",
    "L(0,1)",
    "M(1)",
    "M(0)",
]


def random_map(rng, n):
    return Matrix([[as_scalar(rng.randint(-3, 3)) if rng.random() < 0.3 else ZERO for _ in range(n)] for _ in range(n)])


def test_coboundary_on_abelian_vanishes():
    a = Algebra.abelian(3)
    assert coboundary_of(a, random_map(random.Random(1), 3)).is_zero()


def test_coboundary_of_identity_is_bracket():
    for name in ("L1", "diamond-real", "M(0)"):
        a = catalog.build(name)
        assert coboundary_of(a, Matrix.identity(a.dim)) == Cochain2.from_algebra(a)


def test_coboundary_L1_example():
    L1 = catalog.build("L1")
    rows = [[ZERO] * 7 for _ in range(7)]
    rows[L1.index("X1")][L1.index("J")] = ONE
    f = coboundary_of(L1, Matrix(rows))
    assert f.values() == {
        (L1.index("J"), L1.index("J")): {L1.index("X1"): as_scalar("2/3*i")},
        (L1.index("J"), L1.index("Pp")): {L1.index("X2"): ONE},
    }


def test_coboundary_dimension_mismatch():
    with pytest.raises(CohomologyError):
        coboundary_of(catalog.build("L1"), Matrix.identity(3))


def test_trivial_dimensions():
    assert bl2_basis(Algebra.abelian(2)).dim == 0
    assert bl2_basis(Algebra.abelian(1)).dim == 0
    assert hl2(Algebra.abelian(2)).dims == (0, 8, 8)
    assert zl2_basis(Algebra.abelian(2)).dim == 8


def test_bl2_rank_oracle():
    # dense rank of the coboundary images of all elementary maps
    for name in ("L1", "L2", "diamond-real"):
        a = catalog.build(name)
        n = a.dim
        images = []
        for p in range(n):
            for q in range(n):
                rows = [[ONE if (r, c) == (p, q) else ZERO for c in range(n)] for r in range(n)]
                images.append(coboundary_of(a, Matrix(rows)).flatten())
        assert rank(Matrix(images)) == bl2_basis(a).dim
        flat = [coboundary_of(a, Matrix([[ONE if (r, c) == (p, q) else ZERO for c in range(n)] for r in range(n)])).flat_sparse()
                for p in range(n) for q in range(n)]
        assert flat == coboundary_matrix(a)


def test_bracket_is_cocycle():
    for name in ALGEBRAS:
        a = catalog.build(name)
        assert cocycle_defects(a, Cochain2.from_algebra(a)) == []


def test_listed_phi1_of_L1_is_cocycle():
    phi1 = catalog.listed_cocycles("L1")[0]
    assert cocycle_defects(phi1.base, phi1) == []


def test_perturbed_cocycle_fails():
    phi1 = catalog.listed_cocycles("L1")[0]
    a = phi1.base
    bad = phi1 + Cochain2(a, {(a.index("X1"), a.index("Pp")): {a.index("X1"): 1}})
    defects = cocycle_defects(a, bad)
    assert defects
    i, j, k, _ = defects[0]
    assert a.index("X1") in (i, j, k)


def test_random_cochain_is_not_cocycle():
    a = catalog.build("L1")
    rng = random.Random(5)
    flat = [as_scalar(rng.randint(-2, 2)) for _ in range(a.dim ** 3)]
    assert cocycle_defects(a, Cochain2.from_flat(a, flat))


def test_flattening_order():
    a = Algebra.abelian(3)
    f = Cochain2(a, {(1, 2): {0: 5}})
    flat = f.flatten()
    assert flat[1 * 9 + 2 * 3 + 0] == 5
    assert Cochain2.from_flat(a, flat) == f


@pytest.mark.parametrize("name", ALGEBRAS)
def test_d_squared_is_zero(name):
    a = catalog.build(name)
    rng = random.Random(name)
    for _ in range(20):
        f = coboundary_of(a, random_map(rng, a.dim))
        assert cocycle_defects(a, f) == []


@pytest.mark.parametrize("name", ALGEBRAS)
def test_dimension_bookkeeping(name):
    sp = cached_hl2(name)
    b, z, h = sp.dims
    assert b + h == z
    assert sp.bl2 <= sp.zl2
    assert all(cocycle_defects(sp.algebra, r) == [] for r in sp.hl2_reps)


@pytest.mark.parametrize("name, dims", [("L1", (43, 46, 3)), ("L2", (43, 46, 3)), ("L(1,1)", (59, 61, 2)), ("L(0,1)", (58, 61, 3))])
def test_frozen_dimensions(name, dims):
    assert cached_hl2(name).dims == dims


def test_M1_has_at_least_four_classes():
    assert cached_hl2("M(1)").dims[2] >= 4


@pytest.mark.parametrize("name", ["heisenberg-h1", "diamond-complex-13", "L1"])
def test_dimensions_invariant_under_basis_change(name):
    a = catalog.build(name)
    rng = random.Random(name)
    dims = cached_hl2(name).dims
    for _ in range(3):
        assert hl2(change_basis(a, random_invertible(rng, a.dim))).dims == dims


@pytest.mark.parametrize("name", ["L1", "L(1,1)", "M(0)"])
def test_reduction(name):
    sp = cached_hl2(name)
    a = sp.algebra
    h = len(sp.hl2_reps)
    rng = random.Random(name)
    for m, rep in enumerate(sp.hl2_reps):
        coords, cob = reduce_mod_bl2(a, rep, sp)
        assert coords == tuple(ONE if k == m else ZERO for k in range(h))
        assert cob.is_zero()
    d = random_map(rng, a.dim)
    coords, _ = reduce_mod_bl2(a, coboundary_of(a, d), sp)
    assert all(c == 0 for c in coords)
    c = [as_scalar(rng.randint(-3, 3)) for _ in range(h)]
    f = linear_combination(sp.hl2_reps, c) + coboundary_of(a, d)
    coords, cob = reduce_mod_bl2(a, f, sp)
    assert list(coords) == c
    assert sp.bl2.contains(cob.flatten())


def test_reduction_rejects_non_cocycle():
    a = catalog.build("L1")
    with pytest.raises(CohomologyError):
        reduce_mod_bl2(a, Cochain2(a, {(4, 1): {4: 1}}))


def test_L1_phi2_has_nonzero_coordinates():
    cs = catalog.listed_cocycles("L1")
    coords, _ = reduce_mod_bl2(cs[1].base, cs[1], cached_hl2("L1"))
    assert any(coords)


LISTED = sorted(catalog.LISTED_COCYCLES)


@pytest.mark.parametrize("key", LISTED)
def test_listed_cocycles_are_cocycles(key):
    cs = catalog.listed_cocycles(key)
    bad = [f.name for f in cs if cocycle_defects(f.base, f)]
    assert bad == []


@pytest.mark.parametrize("key", LISTED)
def test_listed_cocycles_independent_mod_bl2(key):
    cs = catalog.listed_cocycles(key)
    sp = cached_hl2(catalog.LISTED_COCYCLES[key])
    good = [f for f in cs if not cocycle_defects(f.base, f)]
    assert len(good) == len(cs), "some listed cochains are not cocycles"
    coords = [reduce_mod_bl2(f.base, f, sp)[0] for f in good]
    relations = kernel_basis(Matrix(coords).T).basis
    assert rank(Matrix(coords)) == len(cs), f"relations modulo coboundaries: {relations}"


def _elementary(a, pairs):
    rows = [[ZERO] * a.dim for _ in range(a.dim)]
    for src, dst, c in pairs:
        rows[a.index(dst)][a.index(src)] = as_scalar(c)
    return Matrix(rows)


@pytest.mark.parametrize(
    "key, combo, dmap",
    [
        # phi2 + phi3/2 is the coboundary of T -> -i/2 J
        ("L1", {"phi2": 1, "phi3": "1/2"}, [("T", "J", "-1/2*i")]),
        # phi5 + phi6 is the coboundary of T -> J
        ("L(0,0)", {"phi5": 1, "phi6": 1}, [("T", "J", 1)]),
        # phi2 - phi3 - phi4 is the coboundary of a diagonal map
        ("M1", {"phi2": 1, "phi3": -1, "phi4": -1},
         [("J", "J", "i"), ("Pm", "Pm", "2*i"), ("T", "T", "2*i"), ("X1", "X1", "2*i"), ("X2", "X2", "2*i")]),
    ],
)
def test_listed_cocycle_relations(key, combo, dmap):
    cs = {f.name: f for f in catalog.listed_cocycles(key)}
    a = next(iter(cs.values())).base
    lhs = linear_combination([cs[k] for k in combo], list(combo.values()))
    assert lhs == coboundary_of(a, _elementary(a, dmap))


def test_n8_cohomology_is_fast():
    a = catalog.build("L(1,1)")
    t = time.perf_counter()
    hl2(a)
    assert time.perf_counter() - t < 10
