"""Exact Gaussian rationals used as algebra coefficients."""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError


class Scalar:
    """A complex number whose real and imaginary parts are exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating point complex numbers are not exact scalars")
        raise TypeError(f"cannot use {type(value).__name__} as a scalar")

    def __add__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = Scalar(0)
ONE = Scalar(1)


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z: Scalar) -> str:
    """Text form accepted back by parse_scalar; complex values are parenthesised."""
    if not z.im:
        return _fmt_frac(z.re)
    im = _fmt_frac(abs(z.im))
    if not z.re:
        return f"({'-' if z.im < 0 else ''}{im}i)"
    return f"({_fmt_frac(z.re)}{'-' if z.im < 0 else '+'}{im}i)"


_RAT = r"\d+(?:/\d+)?"
_COMPLEX = re.compile(
    rf"^\s*(?P<sr>[+-])?\s*(?P<a>{_RAT})\s*(?:(?P<si>[+-])\s*(?P<b>{_RAT})?\s*i)?\s*$"
    rf"|^\s*(?P<sj>[+-])?\s*(?P<c>{_RAT})?\s*i\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse '2', '-1/3', '(1+2i)', '(3/2-i)', 'i'."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    m = _COMPLEX.match(s)
    if not m:
        raise ParseError(f"malformed scalar {text!r}")
    if m.group("a") is not None:
        re_part = Fraction(m.group("a")) * (-1 if m.group("sr") == "-" else 1)
        im_part = Fraction(0)
        if m.group("si"):
            im_part = Fraction(m.group("b") or 1) * (-1 if m.group("si") == "-" else 1)
        return Scalar(re_part, im_part)
    im_part = Fraction(m.group("c") or 1) * (-1 if m.group("sj") == "-" else 1)
    return Scalar(0, im_part)
