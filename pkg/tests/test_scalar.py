from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz.scalar import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    ScalarError,
    ScalarParseError,
    as_scalar,
    format_scalar,
    normalize,
    parse_scalar,
)

from conftest import gaussians, nonzero_gaussians


def test_normalize_reduces():
    assert normalize(2, 4) == GaussianRational(Fraction(1, 2))
    assert format_scalar(normalize(2, 4)) == "1/2"


def test_normalize_moves_sign_to_numerator():
    x = normalize(0, 1, 3, -6)
    assert x.imag == Fraction(-1, 2)
    assert format_scalar(x) == "-1/2*i"


def test_zero_over_five_is_zero():
    assert normalize(0, 5) == ZERO
    assert format_scalar(normalize(0, 5)) == "0"


def test_zero_denominator_rejected():
    with pytest.raises(ScalarError):
        normalize(1, 0)


def test_products():
    assert (1 + I) * (1 - I) == 2
    assert (I / 2) ** 2 == Fraction(-1, 4)
    assert (2 * I) * (I / 2) == -1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@pytest.mark.parametrize(
    "text, value",
    [
        ("-1/3*i", GaussianRational(0, Fraction(-1, 3))),
        ("1/2+3/4*i", GaussianRational(Fraction(1, 2), Fraction(3, 4))),
        ("3", GaussianRational(3)),
        ("i", I),
        ("-2/6", GaussianRational(Fraction(-1, 3))),
        ("1-i", 1 - I),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1/", "1//2", "1/0", "*i", "1+", "2i", "1/2*j", "(1)"])
def test_parse_rejects(text):
    with pytest.raises(ScalarError):
        parse_scalar(text)


def test_parse_error_has_position():
    with pytest.raises(ScalarParseError) as exc:
        parse_scalar("1/2*q")
    assert exc.value.pos >= 3


def test_canonical_format_examples():
    assert format_scalar(GaussianRational(Fraction(1, 2), Fraction(-3, 4))) == "1/2-3/4*i"
    assert format_scalar(I) == "1*i"
    assert format_scalar(-I) == "-1*i"
    assert format_scalar(Fraction(6, 3)) == "2"


def test_mixed_arithmetic_with_python_numbers():
    x = GaussianRational(1, 2)
    assert x + 1 == GaussianRational(2, 2)
    assert 1 - x == GaussianRational(0, -2)
    assert Fraction(1, 2) * x == GaussianRational(Fraction(1, 2), 1)
    assert 1 / I == -I


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)


@settings(max_examples=1000)
@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a + (-a) == ZERO
    assert a - b == a + (-b)


@settings(max_examples=1000)
@given(nonzero_gaussians, gaussians)
def test_inverses(a, b):
    assert a * a.inverse() == ONE
    assert (b / a) * a == b


@settings(max_examples=1000)
@given(gaussians)
def test_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


@given(gaussians)
def test_hash_consistent_with_eq(a):
    b = parse_scalar(format_scalar(a))
    assert hash(a) == hash(b)
    if a.is_real():
        assert a == a.real and hash(a) == hash(a.real)


@given(gaussians, gaussians)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()).is_real()


@given(st.integers(-50, 50), st.integers(1, 50), st.integers(-50, 50), st.integers(1, 50))
def test_normalize_matches_fractions(rn, rd, imn, imd):
    x = normalize(rn, rd, imn, imd)
    assert x.real == Fraction(rn, rd) and x.imag == Fraction(imn, imd)
    assert x.re_den > 0 and x.im_den > 0
