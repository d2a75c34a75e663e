"""The boundary-slope norm as finite exact data.

The norm of a class x*m + y*l is a weighted sum of intersection distances
against a fixed finite list of slopes, with positive even integer weights.
On primitive integer classes it agrees with the slope norm; on real classes
it is piecewise linear and its unit ball is a centrally symmetric polygon
whose vertices lie on the rays spanned by the stored slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterator

from .slopes import MERIDIAN, Slope, distance

__all__ = ["CSNormData", "BoundarySlopeSet"]


def _ccw_compare(v: tuple[int, int], w: tuple[int, int]) -> int:
    # counterclockwise from the positive x-axis; exact integer predicate
    def half(u: tuple[int, int]) -> int:
        return 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1

    hv, hw = half(v), half(w)
    if hv != hw:
        return -1 if hv < hw else 1
    cross = v[0] * w[1] - v[1] * w[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


@dataclass(frozen=True)
class CSNormData:
    """Finite list of (slope, weight) terms defining the norm.

    Weights are even and at least 2; zero-weight slopes are simply not
    stored.  At least two distinct slopes are required, which makes the
    evaluation vanish only on the zero class.
    """

    terms: tuple[tuple[Slope, int], ...]

    def __post_init__(self) -> None:
        cleaned = []
        for entry in self.terms:
            slope, weight = entry
            if not isinstance(slope, Slope):
                raise TypeError("norm term slope must be a Slope")
            if not isinstance(weight, int) or isinstance(weight, bool) or weight <= 0 or weight % 2:
                raise ValueError("weight must be positive even")
            cleaned.append((slope, weight))
        cleaned.sort(key=lambda t: t[0].sort_key())
        slopes = [s for s, _ in cleaned]
        if len(set(slopes)) != len(slopes):
            raise ValueError("duplicate slope in norm terms")
        if len(slopes) < 2:
            raise ValueError("need at least two distinct slopes")
        object.__setattr__(self, "terms", tuple(cleaned))

    @property
    def support(self) -> tuple[Slope, ...]:
        return tuple(s for s, _ in self.terms)

    @property
    def has_meridian_term(self) -> bool:
        return any(s.is_meridian for s, _ in self.terms)

    def evaluate(self, r: Slope) -> int:
        """Norm of the slope r: the weighted sum of distances to the terms."""
        return sum(a * distance(r, s) for s, a in self.terms)

    def evaluate_real(self, x, y) -> Fraction:
        """Norm of the real class x*m + y*l; homogeneous of degree 1."""
        x, y = Fraction(x), Fraction(y)
        return sum((a * abs(x * s.q - y * s.p) for s, a in self.terms), Fraction(0))

    def meridian_norm(self) -> int:
        """Norm of the meridian: the weighted sum of term denominators."""
        return self.evaluate(MERIDIAN)

    def unit_ball_vertices(self) -> list[tuple[Fraction, Fraction]]:
        """Vertices of {v : norm(v) <= 1}, counterclockwise.

        The norm kinks exactly on the rays spanned by the stored slopes, so
        the vertices are the points (t, u)/norm(t, u) over the terms t/u and
        their antipodes, sorted by angle from the positive x-axis.
        """
        dirs: list[tuple[int, int]] = []
        for s, _ in self.terms:
            dirs.append((s.p, s.q))
            dirs.append((-s.p, -s.q))
        dirs.sort(key=cmp_to_key(_ccw_compare))
        vertices = []
        for t, u in dirs:
            n = self.evaluate_real(t, u)
            vertices.append((Fraction(t) / n, Fraction(u) / n))
        return vertices

    def min_norm_nontrivial(self) -> tuple[int, Slope]:
        """Least norm over slopes other than the meridian, with a minimizer.

        Any slope beating the running minimum m lies inside m times the unit
        ball, so the search is confined to the bounding box of that polygon.
        Ties go to the smallest q, then smallest |p|, then positive p.
        """
        candidates = [self._search_key(Slope(0, 1))]
        for s in self.support:
            if not s.is_meridian:
                candidates.append(self._search_key(s))
        best = min(candidates)
        vertices = self.unit_ball_vertices()
        x_extent = max(abs(v[0]) for v in vertices)
        y_extent = max(abs(v[1]) for v in vertices)
        p_max = math.floor(best[0] * x_extent)
        q_max = math.floor(best[0] * y_extent)
        for q in range(1, q_max + 1):
            for p in range(-p_max, p_max + 1):
                if math.gcd(abs(p), q) != 1:
                    continue
                val = sum(a * abs(p * s.q - q * s.p) for s, a in self.terms)
                key = (val, q, abs(p), 0 if p >= 0 else 1, p, q)
                if key < best:
                    best = key
        return best[0], Slope(best[4], best[5])

    def _search_key(self, s: Slope) -> tuple:
        val = self.evaluate(s)
        return (val, s.q, abs(s.p), 0 if s.p >= 0 else 1, s.p, s.q)


@dataclass(frozen=True)
class BoundarySlopeSet:
    """Distinct slopes of essential surfaces, at least one of them finite."""

    slopes: tuple[Slope, ...]

    def __post_init__(self) -> None:
        slopes = tuple(sorted(self.slopes, key=lambda s: s.sort_key()))
        if len(set(slopes)) != len(slopes):
            raise ValueError("duplicate boundary slope")
        if not any(not s.is_meridian for s in slopes):
            raise ValueError("need at least one finite boundary slope")
        object.__setattr__(self, "slopes", slopes)

    @property
    def finite(self) -> tuple[Slope, ...]:
        """Non-meridional members, in increasing numerical order."""
        return tuple(s for s in self.slopes if not s.is_meridian)

    def max_finite(self) -> Slope:
        return self.finite[-1]

    def min_finite(self) -> Slope:
        return self.finite[0]

    def diam(self) -> Fraction:
        """Greatest minus least numerical value; the meridian is ignored."""
        values = [s.value() for s in self.finite]
        if len(values) < 2:
            raise ValueError("diameter undefined")
        return max(values) - min(values)

    def __contains__(self, slope: Slope) -> bool:
        return slope in self.slopes

    def __iter__(self) -> Iterator[Slope]:
        return iter(self.slopes)

    def __len__(self) -> int:
        return len(self.slopes)
