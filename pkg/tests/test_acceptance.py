"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import functools
import itertools
import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from leibniz import catalog
from leibniz.algebra import (
    change_basis,
    check_morphism,
    fingerprint,
    is_lie,
    leibniz_defects,
    quotient_algebra,
    right_annihilator,
    squares_ideal,
)
from leibniz.cohomology import coboundary_of, cocycle_defects
from leibniz.deformation import deform, obstruction_report, random_coefficients, subspace_integrable
from leibniz.linalg import Matrix
from leibniz.modules import action_from_embedding, embedding_defects, right_module_defects, semidirect
from leibniz.scalar import ZERO, I, as_scalar

from conftest import ACCEPTANCE, cached_hl2, random_invertible, sparse_basis_change

GRID = [Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1), Fraction(3, 2)]
REPRESENTATIVES = ["L(1,0)", "L(1,1)", "L(-1,1)", "L(0,0)", "L(0,1)"]
M_ALPHAS = [0, 1, "i", -2, "3/2"]


class Check:
    """Collects sub-results of one criterion."""

    def __init__(self, number: int, title: str) -> None:
        self.number = number
        self.title = title
        self.failures = []
        self.notes = []
        self.count = 0

    def expect(self, ok: bool, what: str) -> bool:
        self.count += 1
        if not ok:
            self.failures.append(what)
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} criterion {self.number}: {self.title} ({self.count} checks)"
        if self.failures:
            head += "; failed: " + "; ".join(self.failures)
        if self.notes:
            head += "; note: " + "; ".join(self.notes)
        return head


def _finish(chk: Check) -> Check:
    ACCEPTANCE[chk.number] = chk.line()
    return chk


def _coeffs_from_directions(dirs, t):
    k = len(dirs[0])
    out = [ZERO] * k
    for d, s in zip(dirs, t):
        for m in range(k):
            if d[m]:
                out[m] = out[m] + s * as_scalar(d[m])
    return out


# 1 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_1() -> Check:
    chk = Check(1, "catalog algebras satisfy the Leibniz identity")
    algebras = [catalog.build(n) for n in ("L1", "L2", *REPRESENTATIVES)]
    algebras += [catalog.L_family(a1, a2) for a1, a2 in itertools.product(GRID, GRID)]
    algebras += [catalog.build("M", alpha=x) for x in M_ALPHAS]
    lie = [catalog.build(n) for n in ("diamond-real", "diamond-complex-12", "diamond-complex-13", "heisenberg-h1")]
    for a in algebras + lie:
        chk.expect(leibniz_defects(a) == [], f"{a.name} has Leibniz defects")
    for a in lie:
        chk.expect(is_lie(a).is_lie, f"{a.name} is not Lie")
    for N in range(3, 9):
        a = catalog.fock_algebra(N)
        chk.expect(leibniz_defects(a, catalog.fock_scoped_triples(a)) == [], f"fock-algebra N={N}")
    return _finish(chk)


# 2 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_2() -> Check:
    chk = Check(2, "matrix embeddings hold and their misprints fail")
    for name in ("sl3-phi", "sl3-psi", "sp4c-eta", "sp4r-theta"):
        chk.expect(embedding_defects(catalog.build(name)) == [], f"{name} is not a homomorphism")
    for name in ("sl3-psi-misprint", "sp4c-eta-misprint"):
        chk.expect(bool(embedding_defects(catalog.build(name))), f"{name} unexpectedly holds")
    return _finish(chk)


# 3 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_3() -> Check:
    chk = Check(3, "modules are right modules and the row convention reproduces them")
    for name in ("sl3module1", "sl3module2", "sp4R", "sp4C"):
        m = catalog.build(name)
        chk.expect(right_module_defects(m.base, m) == [], f"{name} has module defects")
    for emb, table in (("sl3-phi", "sl3module1"), ("sl3-psi", "sl3module2"), ("sp4r-theta", "sp4R"), ("sp4c-eta", "sp4C")):
        got = action_from_embedding(catalog.build(emb), "row")
        chk.expect(got.actions() == catalog.build(table).actions(), f"{emb} does not reproduce {table}")
    return _finish(chk)


# 4 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_4() -> Check:
    chk = Check(4, "semidirect products reproduce the catalog tables")
    for lie, mod, target in (
        ("diamond-complex-12", "sl3module1", "L1"),
        ("diamond-complex-12", "sl3module2", "L2"),
        ("diamond-real", "sp4R", "L(0,0)"),
        ("diamond-complex-12", "sp4C", "M(0)"),
    ):
        q = semidirect(catalog.build(lie), catalog.build(mod))
        t = catalog.build(target)
        chk.expect(q.labels == t.labels and q.same_table(t), f"{lie} x {mod} != {target}")
    return _finish(chk)


# 5 -----------------------------------------------------------------------------


def listed_rank(key: str):
    sp = cached_hl2(catalog.LISTED_COCYCLES[key])
    cs = catalog.listed_cocycles(key, sp.algebra)
    red = sp.reducer()
    coords = [red.coordinates(f)[0] for f in cs if not cocycle_defects(sp.algebra, f)]
    return Matrix(coords).rank() if coords else 0


@functools.lru_cache(maxsize=None)
def criterion_5() -> Check:
    chk = Check(5, "HL2 of L1 and L2 is 3-dimensional and spanned by the listed cocycles")
    for key in ("L1", "L2"):
        sp = cached_hl2(key)
        chk.expect(sp.dims[2] == 3, f"dim HL2({key}) = {sp.dims[2]}")
        cs = catalog.listed_cocycles(key)
        bad = [f.name for f in cs if cocycle_defects(sp.algebra, f)]
        chk.expect(not bad, f"{key}: {', '.join(bad)} not a cocycle")
        r = listed_rank(key)
        chk.expect(r == 3, f"{key}: listed cocycles have rank {r} modulo BL2")
    return _finish(chk)


# 6 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_6() -> Check:
    chk = Check(6, "obstruction support of the listed L1 and L2 bases")
    r1 = obstruction_report(catalog.listed_cocycles("L1"))
    chk.expect(r1.quadratic_support == {(0, 1)}, f"L1 support {r1.monomials()}")
    # phi2 of L2 is not a cocycle as tabulated, so the report is built without that check
    r2 = obstruction_report(catalog.listed_cocycles("L2"), check=False)
    chk.expect(bool(r2.quadratic_support), "L2 support is empty")
    chk.expect(all(1 in key for key in r2.quadratic_support), f"L2 support {r2.monomials()}")
    rng = random.Random(6)
    L1, L2 = catalog.build("L1"), catalog.build("L2")
    for trial in range(60):
        c = random_coefficients(rng, 3)
        if trial % 3 == 0:
            c[trial % 2] = ZERO
        chk.expect(deform(L1, r1.cocycles, c).integrable == (c[0] * c[1] == 0), f"L1 deform at {c}")
        chk.expect(deform(L2, r2.cocycles, c).integrable == (c[1] == 0), f"L2 deform at {c}")
    return _finish(chk)


# 7 -----------------------------------------------------------------------------


def family_cases():
    for key, fams in catalog.INTEGRABLE_FAMILIES.items():
        bases = ["M(1)", "M(0)"] if key == "M1" else [catalog.LISTED_COCYCLES[key]]
        for base in bases:
            for fam in fams:
                yield key, fam, base


def family_verdict(key: str, fam: str, base: str, samples: int = 100):
    a = catalog.build(base)
    cs = catalog.listed_cocycles(key, a)
    dirs = catalog.family_directions(key, fam)
    used = {m for d in dirs for m, x in enumerate(d) if x}
    not_cocycles = [cs[m].name for m in sorted(used) if cocycle_defects(a, cs[m])]
    rep = obstruction_report(cs, check=False)
    closed = subspace_integrable(rep, dirs)
    rng = random.Random(f"{key}/{fam}/{base}")
    bad = 0
    for _ in range(samples):
        t = random_coefficients(rng, len(dirs), nonzero=True)
        if not deform(a, cs, _coeffs_from_directions(dirs, t)).integrable:
            bad += 1
    return not_cocycles, closed, bad


@functools.lru_cache(maxsize=None)
def criterion_7() -> Check:
    chk = Check(7, "listed integrable families are integrable")
    for key, fam, base in family_cases():
        not_cocycles, closed, bad = family_verdict(key, fam, base)
        tag = f"{key} {fam} on {base}"
        chk.expect(not not_cocycles, f"{tag}: {', '.join(not_cocycles)} not cocycles")
        chk.expect(closed, f"{tag}: subspace not integrable")
        chk.expect(bad == 0, f"{tag}: {bad}/100 samples obstructed")
    return _finish(chk)


# 8 -----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def criterion_8() -> Check:
    chk = Check(8, "HL2 directions of L(1,1) and L(-1,1) are not integrable")
    for name in ("L(1,1)", "L(-1,1)"):
        sp = cached_hl2(name)
        rep = obstruction_report(sp.hl2_reps)
        for m in range(rep.k):
            e = [1 if q == m else 0 for q in range(rep.k)]
            chk.expect(bool(rep.quadratic(e)), f"{name}: direction {m + 1} integrable")
        rng = random.Random(name)
        hits = 0
        for trial in range(1000):
            c = random_coefficients(rng, rep.k, nonzero=True)
            if not rep.quadratic(c):
                hits += 1
            elif trial < 40:
                chk.expect(not deform(sp.algebra, sp.hl2_reps, c).integrable, f"{name}: deform disagrees at {c}")
        chk.expect(hits == 0, f"{name}: {hits}/1000 combinations unobstructed")
    chk.note("sampled evidence over 1000 rational combinations per algebra")
    return _finish(chk)


# 9 -----------------------------------------------------------------------------

B_CHOICES = [(1, 2, 3), (1, 0, 1), (2, -1, Fraction(1, 2)), (Fraction(1, 3), 1, -2)]
ALPHA_PAIRS = [(1, 1), (-1, 1), (0, 1), (1, 0), (2, Fraction(-3, 2)), (Fraction(1, 2), Fraction(1, 3))]


@functools.lru_cache(maxsize=None)
def criterion_9() -> Check:
    chk = Check(9, "basis-change law of the L family")
    for (B2, B3, C1), (a1, a2) in itertools.product(B_CHOICES, ALPHA_PAIRS):
        a = catalog.L_family(a1, a2)
        P = catalog.theorem5_transformation(a, B2, B3, C1)
        s = Fraction(B2) ** 2 + Fraction(B3) ** 2
        target = catalog.L_family(Fraction(a1) / (s * Fraction(C1)), s * Fraction(a2) / Fraction(C1))
        tag = f"B=({B2},{B3},{C1}) alpha=({a1},{a2})"
        chk.expect(check_morphism(target, a, P).is_isomorphism, f"{tag}: not an isomorphism")
        chk.expect(change_basis(a, P).same_table(target), f"{tag}: table differs")
    return _finish(chk)


# 10 ----------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def full_fingerprint(name: str):
    return fingerprint(catalog.build(name), with_cohomology=True)


def separation_check(chk: Check) -> None:
    fps = {n: full_fingerprint(n) for n in REPRESENTATIVES}
    for n in ("L(1,1)", "L(-1,1)"):
        chk.expect(fps[n].dim_product_space == 7, f"{n} dim_product_space {fps[n].dim_product_space}")
    for n in ("L(1,0)", "L(0,0)", "L(0,1)"):
        chk.expect(fps[n].dim_product_space == 6, f"{n} dim_product_space {fps[n].dim_product_space}")
    low = ("L(1,0)", "L(0,0)", "L(0,1)")
    for x, y in itertools.combinations(low, 2):
        kx = (fps[x].dim_HL2, fps[x].obstruction_support_signature)
        ky = (fps[y].dim_HL2, fps[y].obstruction_support_signature)
        chk.expect(kx != ky, f"{x} and {y} tie on (dim HL2, obstruction)")
    for x, y in itertools.combinations(REPRESENTATIVES, 2):
        if fps[x] == fps[y]:
            chk.note(f"{x} and {y} tie on every fingerprint component")


@functools.lru_cache(maxsize=None)
def invariance_failures(changes: int = 20):
    bad = []
    for name in REPRESENTATIVES:
        a = catalog.build(name)
        ref = full_fingerprint(name)
        rng = random.Random(f"inv/{name}")
        for _ in range(changes):
            # dense changes for the structural part, sparse ones keep the cohomology solve small
            dense = change_basis(a, random_invertible(rng, a.dim))
            if fingerprint(dense).structural() != ref.structural():
                bad.append(f"{name} structural")
            sparse = change_basis(a, sparse_basis_change(rng, a.dim))
            if fingerprint(sparse, with_cohomology=True) != ref:
                bad.append(f"{name} cohomological")
    return tuple(bad)


@functools.lru_cache(maxsize=None)
def criterion_10() -> Check:
    chk = Check(10, "fingerprints separate the L representatives and are basis invariant")
    separation_check(chk)
    bad = invariance_failures()
    chk.expect(not bad, f"fingerprint changed under basis change: {', '.join(bad)}")
    return _finish(chk)


# 11 ----------------------------------------------------------------------------


def catalog_algebras():
    return [e.name for e in catalog.list_entries() if e.kind == "algebra" and e.name != "fock-algebra"]


@functools.lru_cache(maxsize=None)
def criterion_11() -> Check:
    chk = Check(11, "cohomology, annihilator, quotient and two-path properties over the catalog")
    rng = random.Random(11)
    for name in catalog_algebras():
        sp = cached_hl2(name)
        a = sp.algebra
        n = a.dim
        for _ in range(5):
            D = Matrix([[as_scalar(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
            chk.expect(cocycle_defects(a, coboundary_of(a, D)) == [], f"{a.name}: d(dD) != 0")
        if not is_lie(a).is_lie:
            chk.expect(squares_ideal(a) <= right_annihilator(a), f"{a.name}: I not in Ann_r")
        q = quotient_algebra(a, squares_ideal(a))
        chk.expect(is_lie(q).is_lie, f"{a.name}: quotient is not Lie")
        if not sp.hl2_reps:
            continue
        rep = obstruction_report(sp.hl2_reps)
        for _ in range(10):
            c = random_coefficients(rng, rep.k)
            res = deform(a, sp.hl2_reps, c)
            neg = {k: {x: -y for x, y in v.items()} for k, v in rep.quadratic(c).items()}
            got = {(d.i, d.j, d.k): {x: y for x, y in enumerate(d.value) if y} for d in res.defects}
            chk.expect(got == neg, f"{a.name}: two-path disagreement at {c}")
    # the truncated Fock algebra is Leibniz only on the scoped triples, so d o d = 0 is not expected there
    for N in (3, 4, 5):
        a = catalog.fock_algebra(N)
        chk.expect(squares_ideal(a) <= right_annihilator(a), f"fock-algebra N={N}: I not in Ann_r")
        chk.expect(is_lie(quotient_algebra(a, squares_ideal(a))).is_lie, f"fock-algebra N={N}: quotient not Lie")
    chk.note("d o d = 0 and two-path checks exclude the truncated fock-algebra")
    return _finish(chk)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number):
    chk = CRITERIA[number - 1]()
    assert chk.ok, chk.line()


# finer-grained companions for the criteria that do not pass as a whole


def test_hl2_dims_of_L1_and_L2():
    assert cached_hl2("L1").dims[2] == 3
    assert cached_hl2("L2").dims[2] == 3


def test_L1_listed_cocycles_are_cocycles():
    a = catalog.build("L1")
    assert all(cocycle_defects(a, f) == [] for f in catalog.listed_cocycles("L1"))


@pytest.mark.parametrize("key, fam, base", [c for c in family_cases() if c != ("M2", "mu2", "M(0)")])
def test_family_integrable(key, fam, base):
    not_cocycles, closed, bad = family_verdict(key, fam, base)
    assert not not_cocycles and closed and bad == 0


def test_M2_second_family_is_obstructed():
    cs = catalog.listed_cocycles("M2")
    a = cs[0].base
    phi4 = cs[3]
    assert not deform(a, cs, [0, 0, 0, 1]).integrable
    t = obstruction_report([phi4]).sym_tensors[(0, 0)]
    x4, pm, tt, x3 = (a.index(s) for s in ("X4", "Pm", "T", "X3"))
    assert t[(x4, pm, tt)] == {x3: 3 * I / 4}


def test_separation_of_L_representatives_by_cohomology():
    fps = {n: full_fingerprint(n) for n in REPRESENTATIVES}
    assert [fps[n].dim_HL2 for n in ("L(1,0)", "L(0,0)", "L(0,1)")] == [7, 9, 3]
    assert fps["L(1,1)"] == fps["L(-1,1)"]


def test_fingerprint_invariance_under_basis_change():
    assert invariance_failures() == ()


def main() -> int:
    status = 0
    for crit in CRITERIA:
        chk = crit()
        print(chk.line(), flush=True)
        status |= not chk.ok
    return status


if __name__ == "__main__":
    sys.exit(main())
