"""Exact rational scalars and closed rational intervals.

Every bound produced by the package is built from :class:`fractions.Fraction`
values, so interval endpoints are exact and no rounding mode is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import PreconditionError

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def Q(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Q(self.lo))
        object.__setattr__(self, "hi", Q(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, q: RationalLike) -> "Interval":
        q = Q(q)
        return cls(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, q) -> bool:
        return self.lo <= q <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other: "Interval") -> "Interval":
        if not isinstance(other, Interval):
            return NotImplemented
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval") -> "Interval":
        return self + (-other)

    def scale(self, q: RationalLike) -> "Interval":
        q = Q(q)
        if q >= 0:
            return Interval(q * self.lo, q * self.hi)
        return Interval(q * self.hi, q * self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        if not isinstance(other, Interval):
            return NotImplemented
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def join(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), max(self.hi, other.hi))

    def meet(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), min(self.hi, other.hi))

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Interval(self.hi * self.hi, self.lo * self.lo)
        return Interval(0, max(self.lo * self.lo, self.hi * self.hi))

    def abs(self) -> "Interval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def __repr__(self):
        return f"Interval({format_rational(self.lo)}, {format_rational(self.hi)})"


_BINARY = {"add", "mul", "join", "meet"}
_UNARY = {"neg", "square", "scale"}


def interval_arith(op: str, a: Interval, b: Optional[Interval] = None, q=None) -> Interval:
    """Apply one named interval operation; ``q`` is the scalar for ``scale``."""
    if op in _BINARY:
        if b is None:
            raise PreconditionError(f"{op} needs two operands")
        if op == "add":
            return a + b
        if op == "mul":
            return a * b
        if op == "join":
            return a.join(b)
        return a.meet(b)
    if op in _UNARY:
        if b is not None:
            raise PreconditionError(f"{op} takes one operand")
        if op == "neg":
            return -a
        if op == "square":
            return a.square()
        if q is None:
            raise PreconditionError("scale needs a scalar q")
        return a.scale(q)
    raise PreconditionError(f"unknown interval op {op!r}")


def exact_sqrt(q: Fraction) -> Optional[Fraction]:
    """Return the rational square root of ``q`` if it has one."""
    q = Q(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def rational_sqrt_enclosure(q: RationalLike, tol: RationalLike) -> Interval:
    """Enclose sqrt(q) in an interval of width at most ``tol`` by bisection.

    Perfect rational squares come back as degenerate intervals.
    """
    q, tol = Q(q), Q(tol)
    if q < 0:
        raise PreconditionError(f"square root of negative rational {q}")
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    root = exact_sqrt(q)
    if root is not None:
        return Interval(root, root)
    # sqrt(p/d) = sqrt(p*d)/d; the integer root brackets it within 1/d.
    p, d = q.numerator, q.denominator
    k = math.isqrt(p * d)
    lo, hi = Fraction(k, d), Fraction(k + 1, d)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid * mid <= q:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def sqrt_interval(iv: Interval, tol: RationalLike) -> Interval:
    """Enclosure of ``{sqrt(v) : v in iv}`` for ``iv >= 0``."""
    lo = rational_sqrt_enclosure(max(iv.lo, Fraction(0)), tol).lo
    hi = rational_sqrt_enclosure(iv.hi, tol).hi
    return Interval(lo, hi)
