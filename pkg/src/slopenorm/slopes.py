"""Exact arithmetic on slopes of a one-cusped torus boundary.

A slope is the unoriented isotopy class of an essential simple closed curve
on the boundary torus.  Once a meridian-longitude basis is fixed, a slope is
a primitive homology class up to sign; we store the canonical coprime pair
(p, q) with q >= 0, the meridian being pinned to (1, 0).  The numerical
slope is the fraction p/q, infinite exactly for the meridian.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

__all__ = [
    "Slope",
    "MERIDIAN",
    "LONGITUDE",
    "normalize_slope",
    "distance",
    "numeric_value",
    "enumerate_slopes",
]

_SLOPE_TEXT = re.compile(r"[+-]?\d+(?:/\d+)?")


@dataclass(frozen=True)
class Slope:
    """Canonical coprime pair (p, q) with q >= 0; (p, q) and (-p, -q) agree.

    Construction normalizes the sign but refuses non-primitive pairs: a
    class divisible by an integer > 1 is not a slope, and silently reducing
    it would hide a caller bug.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if not isinstance(p, int) or not isinstance(q, int) or isinstance(p, bool) or isinstance(q, bool):
            raise TypeError("slope components must be integers")
        if p == 0 and q == 0:
            raise ValueError("not a slope")
        if math.gcd(abs(p), abs(q)) != 1:
            raise ValueError("not primitive")
        if q < 0 or (q == 0 and p < 0):
            object.__setattr__(self, "p", -p)
            object.__setattr__(self, "q", -q)

    @property
    def is_meridian(self) -> bool:
        return self.q == 0

    def value(self) -> Fraction:
        """Numerical slope p/q as an exact rational; the meridian has none."""
        if self.q == 0:
            raise ValueError("infinite slope")
        return Fraction(self.p, self.q)

    def sort_key(self) -> tuple:
        """Deterministic ordering: finite slopes by value, meridian last."""
        if self.q == 0:
            return (1, Fraction(0))
        return (0, Fraction(self.p, self.q))

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse "p/q" with an optional sign on p; a bare integer means p/1."""
        s = text.strip()
        if not _SLOPE_TEXT.fullmatch(s):
            raise ValueError(f"not a slope: {text!r}")
        if "/" in s:
            num, den = s.split("/")
            return cls(int(num), int(den))
        return cls(int(s), 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


MERIDIAN = Slope(1, 0)
LONGITUDE = Slope(0, 1)


def normalize_slope(p: int, q: int) -> Slope:
    """Canonical representative of the class +/-(p*m + q*l).

    The map from primitive classes to slopes is two-to-one; (p, q) and
    (-p, -q) return the same Slope.  Raises ValueError for the zero vector
    ("not a slope") and for non-primitive pairs ("not primitive").
    """
    return Slope(p, q)


def distance(r: Slope, s: Slope) -> int:
    """Minimal geometric intersection number |p_r*q_s - q_r*p_s|."""
    return abs(r.p * s.q - r.q * s.p)


def numeric_value(r: Slope) -> Fraction:
    """Exact value p/q of a finite slope; errors on the meridian."""
    return r.value()


def enumerate_slopes(p_max: int, q_max: int, include_meridian: bool = True) -> Iterator[Slope]:
    """All canonical slopes with |p| <= p_max and 1 <= q <= q_max.

    The meridian, when included, comes first; finite slopes follow in
    increasing q, then increasing p, so sweeps are reproducible.
    """
    if include_meridian:
        yield MERIDIAN
    for q in range(1, q_max + 1):
        for p in range(-p_max, p_max + 1):
            if math.gcd(abs(p), q) == 1:
                yield Slope(p, q)
