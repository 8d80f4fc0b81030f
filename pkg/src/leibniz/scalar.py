"""Exact arithmetic in the Gaussian rationals Q(i).

A value ``a + b*i`` is stored over a common positive denominator,
``(re + im*i) / den`` with ``gcd(re, im, den) == 1``.  The per-part
reduced fractions are exposed as ``re_num/re_den`` and ``im_num/im_den``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

__all__ = [
    "GaussianRational",
    "ScalarError",
    "ScalarParseError",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
    "normalize",
    "parse_scalar",
    "format_scalar",
]


class ScalarError(ValueError):
    """Malformed scalar (zero denominator) or division by zero."""


class ScalarParseError(ScalarError):
    def __init__(self, text: str, pos: int, message: str) -> None:
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


ScalarLike = Union["GaussianRational", int, Fraction]


class GaussianRational:
    __slots__ = ("_re", "_im", "_den", "_hash")

    def __init__(self, re_part: ScalarLike = 0, im_part: ScalarLike = 0) -> None:
        r = _to_fraction(re_part)
        m = _to_fraction(im_part)
        den = r.denominator * m.denominator // gcd(r.denominator, m.denominator)
        self._re = r.numerator * (den // r.denominator)
        self._im = m.numerator * (den // m.denominator)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, re_n: int, im_n: int, den: int) -> "GaussianRational":
        # den > 0 required; reduces by the common content
        g = gcd(gcd(re_n, im_n), den)
        self = object.__new__(cls)
        if g != 1:
            re_n //= g
            im_n //= g
            den //= g
        self._re = re_n
        self._im = im_n
        self._den = den
        self._hash = None
        return self

    # parts ------------------------------------------------------------

    @property
    def real(self) -> Fraction:
        return Fraction(self._re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._im, self._den)

    @property
    def re_num(self) -> int:
        return self._re // gcd(self._re, self._den)

    @property
    def re_den(self) -> int:
        return self._den // gcd(self._re, self._den)

    @property
    def im_num(self) -> int:
        return self._im // gcd(self._im, self._den)

    @property
    def im_den(self) -> int:
        return self._den // gcd(self._im, self._den)

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._re, -self._im, self._den)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return GaussianRational._raw(self._re + o._re, self._im + o._im, self._den)
        d1, d2 = self._den, o._den
        return GaussianRational._raw(
            self._re * d2 + o._re * d1, self._im * d2 + o._im * d1, d1 * d2
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return GaussianRational._raw(self._re - o._re, self._im - o._im, self._den)
        d1, d2 = self._den, o._den
        return GaussianRational._raw(
            self._re * d2 - o._re * d1, self._im * d2 - o._im * d1, d1 * d2
        )

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational._raw(a * c - b * d, a * d + b * c, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "GaussianRational":
        a, b = self._re, self._im
        norm = a * a + b * b
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        # 1/((a+bi)/d) = d(a-bi)/(a^2+b^2)
        return GaussianRational._raw(self._den * a, -self._den * b, norm)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self._re, -self._im, self._den)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison -------------------------------------------------------

    def __bool__(self) -> bool:
        return self._re != 0 or self._im != 0

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == o._re and self._im == o._im and self._den == o._den

    def __hash__(self) -> int:
        if self._hash is None:
            if self._im == 0:
                self._hash = hash(Fraction(self._re, self._den))
            else:
                self._hash = hash((self._re, self._im, self._den))
        return self._hash

    def __complex__(self) -> complex:
        return complex(self._re / self._den, self._im / self._den)

    def __repr__(self) -> str:
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __reduce__(self):
        return (GaussianRational, (self.real, self.imag))


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def _coerce(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return GaussianRational._raw(x.numerator, 0, x.denominator)
    return None


def as_scalar(x) -> GaussianRational:
    """Coerce ints, Fractions, numeric strings and GaussianRationals."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    o = _coerce(x)
    if o is None:
        raise TypeError(f"not an exact scalar: {x!r}")
    return o


def normalize(re_num: int, re_den: int, im_num: int = 0, im_den: int = 1) -> GaussianRational:
    """Build the canonical value of ``re_num/re_den + (im_num/im_den)*i``."""
    if re_den == 0 or im_den == 0:
        raise ScalarError("zero denominator in scalar")
    return GaussianRational(Fraction(re_num, re_den), Fraction(im_num, im_den))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


# text form ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``R``, ``R*i``, ``R+R*i``, ``R-R*i`` with optional leading ``-``.

    ``R`` is ``INT`` or ``INT/POSINT``.

    A bare ``i`` is accepted as ``1*i``.  Whitespace is ignored.
    """
    p = _ScalarParser(text)
    value = p.scalar()
    p.skip_ws()
    if p.pos != len(text):
        raise ScalarParseError(text, p.pos, "unexpected trailing input")
    return value


class _ScalarParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ScalarParseError(self.text, self.pos, f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ScalarParseError(self.text, start, "expected an integer")
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            at = self.pos
            den = self.integer()
            if den == 0:
                raise ScalarParseError(self.text, at, "zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def imag_suffix(self) -> bool:
        if self.peek() == "*":
            save = self.pos
            self.pos += 1
            if self.peek() == "i":
                self.pos += 1
                return True
            self.pos = save
        return False

    def scalar(self) -> GaussianRational:
        # a leading '-' binds to the first rational, so "-1/2+3/4*i" is (-1/2)+(3/4)i
        lead = 1
        while self.peek() == "-":
            self.pos += 1
            lead = -lead
        if self.peek() == "i":
            self.pos += 1
            return GaussianRational(0, lead)
        first = lead * self.rational()
        if self.imag_suffix():
            return GaussianRational(0, first)
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            sign = 1 if ch == "+" else -1
            if self.peek() == "-":
                self.pos += 1
                sign = -sign
            if self.peek() == "i":
                self.pos += 1
                return GaussianRational(first, sign)
            second = self.rational()
            if not self.imag_suffix():
                raise ScalarParseError(self.text, self.pos, "expected '*i'")
            return GaussianRational(first, sign * second)
        return GaussianRational(first)


def _format_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def format_scalar(x: ScalarLike) -> str:
    """Canonical text: reduced fractions, ``/1`` dropped, imaginary part last."""
    x = as_scalar(x)
    r, m = x.real, x.imag
    if m == 0:
        return _format_fraction(r)
    im_text = _format_fraction(abs(m)) + "*i"
    if r == 0:
        return im_text if m > 0 else "-" + im_text
    return _format_fraction(r) + ("+" if m > 0 else "-") + im_text
