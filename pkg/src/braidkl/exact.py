"""Exact scalar and polynomial arithmetic.

All counts in this package are exact: integers are Python's native
arbitrary-precision ints, rationals are fractions.Fraction, and polynomials
are dense integer-coefficient univariate polynomials (IntPoly).  Closed-form
count formulas are evaluated in Fraction because individual factors (e.g.
(2r-1)^(r-3) for small r) are not integers, and integrality is asserted only
on the final value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]

__all__ = [
    "IntPoly",
    "ResourceCapError",
    "as_integer",
    "binomial",
    "double_factorial",
    "factorial",
    "int_power",
    "multinomial",
]


class ResourceCapError(RuntimeError):
    """An enumeration was requested beyond its documented desk-scale cap."""


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)..., with (-1)!! = 1 (empty product)."""
    if n == -1:
        return 1
    if n < 0:
        raise ValueError(f"double factorial of negative {n} (only -1 allowed)")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial with negative top {n}")
    return math.comb(n, k) if 0 <= k <= n else 0


def multinomial(top: int, parts: Iterable[int]) -> int:
    """top! / prod(part!) for parts summing to top."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative multinomial part in {parts}")
    if sum(parts) != top:
        raise ValueError(f"multinomial parts {parts} do not sum to {top}")
    out = factorial(top)
    for p in parts:
        out //= factorial(p)
    return out


def int_power(base: Rat, exp: int) -> Rat:
    """Exact base**exp for signed integer exp.

    0 raised to a negative exponent is a domain error: it signals an
    identity evaluated outside its guard.
    """
    if exp >= 0:
        return base ** exp
    if base == 0:
        raise ValueError("0 raised to a negative exponent")
    return Fraction(1, 1) / Fraction(base) ** (-exp)


def as_integer(x: Rat) -> int:
    """Assert x is an integer and return it as int.

    Raises ArithmeticError on a non-integral value: every closed form in
    this package counts something, so a fractional result means the formula
    was transcribed wrong.
    """
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ArithmeticError(f"expected integer, got {x}")
        return x.numerator
    return int(x)


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    coeffs[i] is the coefficient of t^i; the top stored coefficient is
    nonzero unless the polynomial is zero (empty coeffs).  Degrees stay
    small here (< 15 at desk scale), so no sparse tricks.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        """Coefficient of t^i, zero beyond the stored degree."""
        if i < 0:
            raise ValueError(f"negative exponent {i}")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly([c * a for a in self.coeffs])

    def reversal(self, d: int) -> "IntPoly":
        """t^d * p(1/t), i.e. coefficients flipped into degree d."""
        if d < self.degree():
            raise ValueError(f"reversal degree {d} < deg {self.degree()}")
        out = [0] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return IntPoly(out)

    def eval_at(self, x: Rat) -> Rat:
        out: Rat = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t" if c != 1 else "t")
            else:
                terms.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(terms)
