import functools
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from leibniz import catalog
from leibniz.cohomology import hl2
from leibniz.linalg import Matrix
from leibniz.scalar import GaussianRational

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(bool)


@functools.lru_cache(maxsize=None)
def cached_hl2(name: str):
    return hl2(catalog.build(name))


def random_invertible(rng: random.Random, n: int, density: float = 0.25) -> Matrix:
    """Identity plus a few small integer entries, followed by a random permutation."""
    while True:
        rows = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j and rng.random() < density:
                    rows[i][j] = Fraction(rng.randint(-2, 2))
        perm = list(range(n))
        rng.shuffle(perm)
        m = Matrix([rows[p] for p in perm])
        if m.rank() == n:
            return m


def sparse_basis_change(rng: random.Random, n: int, shears: int = 2) -> Matrix:
    """Permutation times a diagonal scaling, composed with a few elementary shears."""
    scales = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3)]
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = rng.choice(scales)
    m = Matrix(rows)
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        e = [[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]
        e[i][j] = Fraction(rng.choice([-2, -1, 1, 2]))
        m = m @ Matrix(e)
    return m


@pytest.fixture
def rng():
    return random.Random(20261014)


# criterion number -> PASS/FAIL line, filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
