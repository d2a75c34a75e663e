"""Built-in datasets: the figure-eight knot exterior and two knot families
described by crossing data.

The figure-eight data is complete (cusp shape, norm terms, boundary slopes).
The pretzel family carries its two known boundary surfaces and, when the
parameter allows, a certified meridian-norm value; no full set of norm
weights is known, so none is fabricated.  Two-bridge knots appear abstractly
through the crossing-number identities of their checkerboard surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cusp import CuspLattice
from .manifold import ManifoldData, SurfaceData
from .norm import BoundarySlopeSet, CSNormData
from .slopes import Slope
from .verify import HOLDS, FAILS, VerifyReport

__all__ = [
    "FamilySpec",
    "fig8_dataset",
    "pretzel_dataset",
    "twobridge_pair",
    "twobridge_dataset",
]

FAMILY_IDS = ("figure_eight", "pretzel_2_3_n", "two_bridge_abstract")


def fig8_dataset() -> ManifoldData:
    """The figure-eight knot exterior with its maximal cusp shape.

    Meridian and longitude translations are perpendicular with squared
    lengths 1 and 12; the norm weights both extremal boundary slopes 4/1
    and -4/1 by 2.
    """
    s_pos, s_neg = Slope(4, 1), Slope(-4, 1)
    return ManifoldData(
        name="figure-eight",
        boundary_slopes=BoundarySlopeSet((s_pos, s_neg)),
        cusp=CuspLattice(Fraction(1), Fraction(0), Fraction(12), maximal=True),
        norm=CSNormData(((s_pos, 2), (s_neg, 2))),
    )


def pretzel_dataset(n: int) -> ManifoldData:
    """The (-2, 3, n)-pretzel knot exterior for odd n >= 7.

    Two ideal-point surfaces are recorded: boundary slope 16 with Euler
    characteristic 6 - n, and boundary slope 2n + 6 with Euler
    characteristic -1, both with connected boundary.  For n not divisible
    by 3 the certified meridian-norm value 3n - 9 is attached; the full
    weight data is not known, so no norm terms are stored.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 7 or n % 2 == 0:
        raise ValueError("n must be an odd integer >= 7")
    s1, s2 = Slope(16, 1), Slope(2 * n + 6, 1)
    surfaces = (
        SurfaceData(slope=s1, euler=6 - n, b=1, strict=True, ideal_point=True),
        SurfaceData(slope=s2, euler=-1, b=1, strict=True, ideal_point=True),
    )
    return ManifoldData(
        name=f"pretzel(-2,3,{n})",
        boundary_slopes=BoundarySlopeSet((s1, s2)),
        surfaces=surfaces,
        meridian_norm_certificate=3 * n - 9 if n % 3 != 0 else None,
    )


def twobridge_pair(crossings: int, chi1: int, chi2: int) -> VerifyReport:
    """Distance bound for the checkerboard pair of a two-bridge diagram.

    The two checkerboard surfaces of a reduced alternating diagram with C
    crossings are spanning (one boundary component each), sit at slope
    distance 2C, and split Euler characteristic as chi1 + chi2 = 2 - C.
    Verifies 2C >= 2((-chi1) + (-chi2)) = 2C - 4 >= 2*(-chi_i) for each i.
    """
    if not isinstance(crossings, int) or isinstance(crossings, bool) or crossings < 3:
        raise ValueError("crossing number must be an integer >= 3")
    if chi1 >= 0 or chi2 >= 0:
        raise ValueError("Euler characteristics must be negative")
    if chi1 + chi2 != 2 - crossings:
        raise ValueError("Euler characteristics must sum to 2 - crossings")
    d = 2 * crossings
    mid = 2 * ((-chi1) + (-chi2))
    per = (2 * (-chi1), 2 * (-chi2))
    ok = d >= mid and all(mid >= x for x in per) and all(d >= x for x in per)
    return VerifyReport(
        f"two-bridge(C={crossings}, chi=({chi1},{chi2}))",
        HOLDS if ok else FAILS,
        str(d),
        str(max(per)),
        ">=" if ok else "<",
        witnesses=(f"chi1={chi1}", f"chi2={chi2}"),
        detail=f"2C = {d} >= 2C - 4 = {mid} >= per-surface bounds {per}",
    )


def twobridge_dataset(crossings: int, chi1: int | None = None) -> ManifoldData:
    """Representative dataset for a two-bridge checkerboard pair.

    Only the slope distance 2C is family data; the two slopes are placed at
    0 and 2C in a convenient framing.  The Euler split defaults to the most
    balanced one and must keep both characteristics negative, which needs
    C >= 4.
    """
    if not isinstance(crossings, int) or isinstance(crossings, bool) or crossings < 3:
        raise ValueError("crossing number must be an integer >= 3")
    if chi1 is None:
        chi1 = -((crossings - 2 + 1) // 2)
    chi2 = 2 - crossings - chi1
    report = twobridge_pair(crossings, chi1, chi2)  # validates the split
    assert report.ok
    s1, s2 = Slope(0, 1), Slope(2 * crossings, 1)
    surfaces = (
        SurfaceData(slope=s1, euler=chi1, b=1, strict=True, ideal_point=True),
        SurfaceData(slope=s2, euler=chi2, b=1, strict=True, ideal_point=True),
    )
    return ManifoldData(
        name=f"two-bridge-C{crossings}",
        boundary_slopes=BoundarySlopeSet((s1, s2)),
        surfaces=surfaces,
    )


@dataclass(frozen=True)
class FamilySpec:
    """Family identifier plus its integer parameters.

    Families: "figure_eight" (no parameters), "pretzel_2_3_n" (n odd >= 7),
    "two_bridge_abstract" (crossings >= 3, optional chi1/chi2 split summing
    to 2 - crossings with both negative).
    """

    family: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", dict(self.params))
        if self.family not in FAMILY_IDS:
            raise ValueError(f"unknown family: {self.family!r}")
        if self.family == "pretzel_2_3_n":
            n = self.params.get("n")
            if not isinstance(n, int) or n < 7 or n % 2 == 0:
                raise ValueError("n must be an odd integer >= 7")
        if self.family == "two_bridge_abstract":
            c = self.params.get("crossings")
            if not isinstance(c, int) or c < 3:
                raise ValueError("crossing number must be an integer >= 3")
            if ("chi1" in self.params) != ("chi2" in self.params):
                raise ValueError("give both chi1 and chi2 or neither")
            if "chi1" in self.params:
                chi1, chi2 = self.params["chi1"], self.params["chi2"]
                if chi1 >= 0 or chi2 >= 0:
                    raise ValueError("Euler characteristics must be negative")
                if chi1 + chi2 != 2 - c:
                    raise ValueError("Euler characteristics must sum to 2 - crossings")

    def build(self) -> ManifoldData:
        if self.family == "figure_eight":
            return fig8_dataset()
        if self.family == "pretzel_2_3_n":
            return pretzel_dataset(self.params["n"])
        return twobridge_dataset(self.params["crossings"], self.params.get("chi1"))

    def hypothesis_report(self) -> VerifyReport:
        """Distance-bound report for the abstract two-bridge pair."""
        if self.family != "two_bridge_abstract":
            raise ValueError("hypothesis report only applies to the two-bridge family")
        c = self.params["crossings"]
        chi1 = self.params.get("chi1", -((c - 2 + 1) // 2))
        chi2 = 2 - c - chi1
        return twobridge_pair(c, chi1, chi2)
