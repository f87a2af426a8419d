"""Closed rational intervals for certified enclosures.

All endpoints are exact Fractions; operations return intervals that are
guaranteed to contain the exact result.  Tightness is not promised, only
soundness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .golden import GoldenInt, GoldenRational

__all__ = ["RationalInterval", "sqrt_interval", "three_halves_interval"]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, x) -> "RationalInterval":
        x = _frac(x)
        return cls(x, x)

    @classmethod
    def of_golden(cls, a: GoldenInt | GoldenRational, bits: int = 128) -> "RationalInterval":
        return cls(*a.bounds(bits))

    # -- queries ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = _frac(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def abs_upper(self) -> Fraction:
        return max(abs(self.lo), abs(self.hi))

    def abs_lower(self) -> Fraction:
        if self.contains(0):
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def within(self, center, tol) -> bool:
        """True when every point of the interval is within tol of center."""
        center, tol = _frac(center), _frac(tol)
        return abs(self.lo - center) <= tol and abs(self.hi - center) <= tol

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, RationalInterval):
            return RationalInterval(self.lo + other.lo, self.hi + other.hi)
        other = _frac(other)
        return RationalInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if isinstance(other, RationalInterval):
            return self + (-other)
        return self + (-_frac(other))

    def __rsub__(self, other):
        return (-self) + _frac(other)

    def __mul__(self, other):
        if isinstance(other, RationalInterval):
            cands = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return RationalInterval(min(cands), max(cands))
        other = _frac(other)
        if other >= 0:
            return RationalInterval(self.lo * other, self.hi * other)
        return RationalInterval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def inverse(self) -> "RationalInterval":
        if not self.excludes_zero():
            raise ZeroDivisionError("interval contains zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        if isinstance(other, RationalInterval):
            return self * other.inverse()
        return self * (1 / _frac(other))

    def __rtruediv__(self, other):
        return self.inverse() * _frac(other)

    def __pow__(self, k: int) -> "RationalInterval":
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalInterval.point(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_json(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi)}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalInterval":
        return cls(Fraction(obj["lo"]), Fraction(obj["hi"]))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _sqrt_lower(x: Fraction, bits: int) -> Fraction:
    if x < 0:
        raise ValueError("negative radicand")
    p, q = x.numerator, x.denominator
    scale = 1 << bits
    r = isqrt(p * q * scale * scale)
    return Fraction(r, q * scale)


def _sqrt_upper(x: Fraction, bits: int) -> Fraction:
    if x < 0:
        raise ValueError("negative radicand")
    p, q = x.numerator, x.denominator
    scale = 1 << bits
    r = isqrt(p * q * scale * scale)
    if r * r < p * q * scale * scale:
        r += 1
    return Fraction(r, q * scale)


def sqrt_interval(x, bits: int = 96) -> RationalInterval:
    """Sound enclosure of sqrt over a nonnegative interval or rational."""
    if not isinstance(x, RationalInterval):
        x = RationalInterval.point(x)
    return RationalInterval(_sqrt_lower(x.lo, bits), _sqrt_upper(x.hi, bits))


def three_halves_interval(x, bits: int = 96) -> RationalInterval:
    """Sound enclosure of x**(3/2) for nonnegative x."""
    if not isinstance(x, RationalInterval):
        x = RationalInterval.point(x)
    return sqrt_interval(x * x * x, bits)
