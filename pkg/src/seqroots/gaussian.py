"""Exact Gaussian-integer and Gaussian-rational arithmetic.

Everything is built on Python's unbounded ``int``, so results stay exact no
matter how fast the iteration counts grow.  Values are immutable and safe to
share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class DivisionByZero(ZeroDivisionError):
    """Division by the zero Gaussian integer."""


@dataclass(frozen=True, slots=True)
class GaussInt:
    """Complex number with integer real and imaginary parts."""

    re: int = 0
    im: int = 0

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """Squared modulus, an ordinary non-negative integer."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        return gauss_to_text(self)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)


def gauss_to_text(z: GaussInt) -> str:
    """Render ``a+bi`` in the shortest conventional form ("0", "i", "2-3i", ...)."""
    if z.im == 0:
        return str(z.re)
    if z.im == 1:
        imag = "i"
    elif z.im == -1:
        imag = "-i"
    else:
        imag = f"{z.im}i"
    if z.re == 0:
        return imag
    sign = "+" if z.im > 0 else ""
    return f"{z.re}{sign}{imag}"


@dataclass(frozen=True, slots=True)
class GaussRational:
    """Gaussian integer over a positive integer denominator, kept in canonical
    reduced form: den > 0 and gcd(num.re, num.im, den) == 1.  Equality of
    canonical forms is then plain field equality."""

    num: GaussInt
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise DivisionByZero("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = math.gcd(math.gcd(num.re, num.im), den)
        if g > 1:
            num = GaussInt(num.re // g, num.im // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __mul__(self, other: "GaussInt | GaussRational") -> "GaussRational":
        if isinstance(other, GaussInt):
            return GaussRational(self.num * other, self.den)
        return GaussRational(self.num * other.num, self.den * other.den)

    def __sub__(self, other: "GaussRational") -> "GaussRational":
        num = self.num * GaussInt(other.den, 0) - other.num * GaussInt(self.den, 0)
        return GaussRational(num, self.den * other.den)

    def __str__(self) -> str:
        if self.den == 1:
            return gauss_to_text(self.num)
        num = gauss_to_text(self.num)
        if self.num.im != 0:
            num = f"({num})"
        return f"{num}/{self.den}"


def gauss_divide(z1: GaussInt, z2: GaussInt) -> GaussRational:
    """Exact quotient z1/z2 as a canonical GaussRational.

    Multiplies by the conjugate of z2 so the denominator is the positive
    integer |z2|^2; raises DivisionByZero when z2 = 0.
    """
    if z2.is_zero():
        raise DivisionByZero("division by zero Gaussian integer")
    return GaussRational(z1 * z2.conjugate(), z2.norm())


def to_float(q: GaussRational) -> complex:
    """Nearest floating approximation of each component.

    Exact int/int division in Python rounds correctly even for huge operands;
    quotients outside the double range are unsupported and raise OverflowError.
    """
    return complex(q.num.re / q.den, q.num.im / q.den)
