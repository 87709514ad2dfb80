"""Exact Gaussian-rational scalars ``a + b i`` with ``a, b`` in Q."""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt


class Gaussian:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "Gaussian":
        if isinstance(value, Gaussian):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(value, 0)

    def __add__(self, other):
        other = Gaussian.coerce(other)
        return Gaussian(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-Gaussian.coerce(other))

    def __rsub__(self, other):
        return Gaussian.coerce(other) - self

    def __mul__(self, other):
        other = Gaussian.coerce(other)
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Gaussian.coerce(other)
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * other.conjugate()
        return Gaussian(num.re / d, num.im / d)

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, always rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Gaussian, complex)):
            other = Gaussian.coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({format_fraction(self.re)}, {format_fraction(self.im)})"

    def __str__(self):
        return format_gaussian(self)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_gaussian(z: Gaussian) -> str:
    if z.im == 0:
        return format_fraction(z.re)
    im = format_fraction(abs(z.im)) + " i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im
    return f"{format_fraction(z.re)}{'-' if z.im < 0 else '+'}{im}"


_LITERAL = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(i?)\s*")


def parse_gaussian(text: str) -> Gaussian:
    """Parse literals such as ``3``, ``-1/2``, ``2 i``, ``1/2+3/4 i``."""
    text = text.strip()
    pos, total = 0, Gaussian()
    if not text:
        raise ValueError("empty coefficient literal")
    while pos < len(text):
        m = _LITERAL.match(text, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"bad coefficient literal {text!r} at position {pos}")
        value = Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        total = total + (Gaussian(0, value) if m.group(3) else Gaussian(value))
        pos = m.end()
    return total


def exact_sqrt(x: Fraction):
    """Return sqrt(x) as a Fraction when x is a rational square, else None."""
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None
