"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Both serialize through a small string grammar shared with the JSON documents:
rationals as ``"p/q"`` (``q`` omitted when 1, sign on the numerator) and
Gaussian rationals as ``"a+b*i"`` where ``a`` and ``b`` use the rational
grammar and the sign between them is always explicit.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


class UnsupportedParameterError(ValueError):
    """A requested parameter needs an irrational radical."""


def Q(x, den=None) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if den is not None:
        return Fraction(x, den)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Q(re))
        object.__setattr__(self, "im", Q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """``|z|^2`` computed exactly."""
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm2()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussianRational(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_rational(self.re)}, {format_rational(self.im)})"

    def __str__(self):
        return format_gaussian(self)


I = GaussianRational(0, 1)


def format_rational(q) -> str:
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_gaussian(z: GaussianRational) -> str:
    sign = "-" if z.im < 0 else "+"
    return f"{format_rational(z.re)}{sign}{format_rational(abs(z.im))}*i"


_GAUSS_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)([+-])(\d+(?:/\d+)?)\*i$")


def parse_gaussian(text: str) -> GaussianRational:
    m = _GAUSS_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad Gaussian rational literal {text!r}")
    im = parse_rational(m.group(3))
    if m.group(2) == "-":
        im = -im
    return GaussianRational(parse_rational(m.group(1)), im)


def format_scalar(x) -> str:
    if isinstance(x, GaussianRational):
        return format_gaussian(x)
    return format_rational(x)


def parse_scalar(text: str):
    if text.strip().endswith("*i"):
        return parse_gaussian(text)
    return parse_rational(text)


def is_square_int(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def rational_sqrt(q, name: str = "sqrt") -> Fraction:
    """Exact non-negative square root of a rational, or raise.

    ``name`` labels the radical in the error message.
    """
    q = Q(q)
    if q < 0:
        raise UnsupportedParameterError(f"{name}: square root of negative {format_rational(q)}")
    n, d = q.numerator, q.denominator
    if not (is_square_int(n) and is_square_int(d)):
        raise UnsupportedParameterError(
            f"{name} = sqrt({format_rational(q)}) is irrational")
    return Fraction(math.isqrt(n), math.isqrt(d))


def gaussian_sqrt(z, name: str = "sqrt") -> GaussianRational:
    """Principal square root of a Gaussian rational (Re >= 0, Im >= 0 on the cut)."""
    if not isinstance(z, GaussianRational):
        z = GaussianRational(z, 0)
    modulus = rational_sqrt(z.norm2(), f"|{name}|")
    re = rational_sqrt((modulus + z.re) / 2, f"Re {name}")
    im = rational_sqrt((modulus - z.re) / 2, f"Im {name}")
    if z.im < 0:
        im = -im
    return GaussianRational(re, im)


def to_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x, 0)


def ring_of(x) -> str:
    from .poly import MultiPoly

    if isinstance(x, MultiPoly):
        return "polynomial"
    if isinstance(x, GaussianRational):
        return "gaussian"
    return "rational"
