"""Exact Euclidean geometry of the cusp cross-section torus.

The horotorus is a flat torus; its translation lattice in the
(meridian, longitude) basis is recorded by the Gram entries
g_mm = <m, m>, g_ml = <m, l>, g_ll = <l, l>.  Lengths are kept as exact
squared rationals and angles as sin^2 values, so every comparison is
decided in integer arithmetic.  Square roots are taken only for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .slopes import MERIDIAN, Slope, distance

__all__ = ["CuspLattice", "SqrtSum", "cmp_sqrt3"]

RationalLike = Fraction | int | str


def _nearest_int(x: Fraction) -> int:
    # nearest integer, ties rounded up; exact on Fractions
    return math.floor(x + Fraction(1, 2))


def cmp_sqrt3(a: RationalLike, b: RationalLike, c: RationalLike) -> int:
    """Exact sign of sqrt(a) + sqrt(b) - sqrt(c) for non-negative rationals.

    Squaring twice removes the radicals: sqrt(a) + sqrt(b) >= sqrt(c) iff
    2*sqrt(a*b) >= c - a - b, and once the right side is non-negative both
    sides can be squared.  No floating point is involved.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a < 0 or b < 0 or c < 0:
        raise ValueError("negative input")
    d = c - a - b
    if d < 0:
        return 1
    lhs = 4 * a * b
    rhs = d * d
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


@dataclass(frozen=True)
class SqrtSum:
    """The formal quantity sqrt(a) + sqrt(b) - sqrt(c), all parts >= 0."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = Fraction(getattr(self, name))
            if value < 0:
                raise ValueError("negative input")
            object.__setattr__(self, name, value)

    def sign(self) -> int:
        return cmp_sqrt3(self.a, self.b, self.c)

    def __float__(self) -> float:
        return math.sqrt(self.a) + math.sqrt(self.b) - math.sqrt(self.c)

    def __str__(self) -> str:
        return f"sqrt({self.a}) + sqrt({self.b}) - sqrt({self.c})"


@dataclass(frozen=True)
class CuspLattice:
    """Positive-definite Gram matrix of the horotorus translation lattice.

    The `maximal` flag asserts that the horotorus is the maximal one, which
    forces every slope to have length at least 1; construction rejects a
    flagged lattice whose systole is shorter.
    """

    g_mm: Fraction
    g_ml: Fraction
    g_ll: Fraction
    maximal: bool = False

    def __post_init__(self) -> None:
        for name in ("g_mm", "g_ml", "g_ll"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.g_mm <= 0 or self.g_ll <= 0 or self.area_squared() <= 0:
            raise ValueError("Gram matrix is not positive definite")
        if self.maximal and self.systole_squared()[0] < 1:
            raise ValueError("maximal flag violates length >= 1")

    # -- quadratic form ----------------------------------------------------

    def _qval(self, p: int, q: int) -> Fraction:
        return p * p * self.g_mm + 2 * p * q * self.g_ml + q * q * self.g_ll

    def _inner(self, u: tuple[int, int], v: tuple[int, int]) -> Fraction:
        return (
            u[0] * v[0] * self.g_mm
            + (u[0] * v[1] + u[1] * v[0]) * self.g_ml
            + u[1] * v[1] * self.g_ll
        )

    def squared_length(self, r: Slope) -> Fraction:
        """Squared Euclidean length of the geodesic representative of r."""
        return self._qval(r.p, r.q)

    def area_squared(self) -> Fraction:
        """Squared area of the torus: the Gram determinant."""
        return self.g_mm * self.g_ll - self.g_ml * self.g_ml

    def sin_sq_angle(self, r: Slope, s: Slope) -> Fraction:
        """sin^2 of the angle between the geodesics of r and s, in [0, 1].

        Computed as 1 - cos^2 from the exact inner product; parallel slopes
        give 0, a perpendicular pair gives 1.
        """
        if r == s:
            return Fraction(0)
        lr = self._qval(r.p, r.q)
        ls = self._qval(s.p, s.q)
        dot = self._inner((r.p, r.q), (s.p, s.q))
        return (lr * ls - dot * dot) / (lr * ls)

    def lemma1_identity(self, r: Slope, s: Slope) -> bool:
        """Check distance^2 * area^2 == len^2(r) * len^2(s) * sin^2(angle).

        The relation ties intersection number to lattice geometry and holds
        for every valid lattice and slope pair; the method exists as an
        exact self-test oracle.
        """
        d = distance(r, s)
        lhs = Fraction(d * d) * self.area_squared()
        rhs = self._qval(r.p, r.q) * self._qval(s.p, s.q) * self.sin_sq_angle(r, s)
        return lhs == rhs

    # -- shortest vector ---------------------------------------------------

    def systole_squared(self) -> tuple[Fraction, Slope]:
        """Minimal squared slope length and a slope attaining it.

        Runs Lagrange-Gauss reduction on the Gram matrix, then inspects the
        reduced basis vectors and their sum and difference, which between
        them contain every minimal vector.  Ties are broken toward the
        meridian, then smaller q, then smaller |p|, then positive p.
        """
        u, v = (1, 0), (0, 1)
        if self._qval(*u) > self._qval(*v):
            u, v = v, u
        while True:
            t = _nearest_int(self._inner(u, v) / self._qval(*u))
            v = (v[0] - t * u[0], v[1] - t * u[1])
            if self._qval(*v) >= self._qval(*u):
                break
            u, v = v, u
        best = self._qval(*u)
        candidates = [u, v, (u[0] + v[0], u[1] + v[1]), (u[0] - v[0], u[1] - v[1])]
        slopes = {Slope(*c) for c in candidates if self._qval(*c) == best}

        def tie_key(s: Slope) -> tuple:
            return (0 if s.is_meridian else 1, s.q, abs(s.p), 0 if s.p >= 0 else 1)

        return best, min(slopes, key=tie_key)

    # -- consistency checks -------------------------------------------------

    def agol_check(self, surface) -> bool:
        """Whether the surface's slope obeys length <= 6*(-euler)/b here.

        Exact squared form: len^2(slope) * b^2 <= 36 * euler^2.  Used to
        validate that a cusp shape and a surface record can coexist.
        """
        if surface.euler >= 0:
            raise ValueError("non-negative Euler characteristic")
        lhs = self.squared_length(surface.slope) * surface.b * surface.b
        return lhs <= 36 * surface.euler * surface.euler

    def meridian_length_squared(self) -> Fraction:
        return self.squared_length(MERIDIAN)
