"""Executable checks for the inequalities tying slope lengths, the
boundary-slope norm, and the boundary-slope diameter together.

Each checker returns a VerifyReport carrying exact left/right values and a
status; every decision reduces to integer or rational sign tests, or to the
exact square-root comparator, so there is no epsilon anywhere.  Decimal
renderings appear only in detail strings, with 12 significant digits.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .cusp import CuspLattice, cmp_sqrt3
from .manifold import ManifoldData, SurfaceData
from .norm import BoundarySlopeSet, CSNormData
from .slopes import MERIDIAN, Slope, distance, enumerate_slopes

__all__ = [
    "HOLDS",
    "EQUALITY",
    "FAILS",
    "NOT_APPLICABLE",
    "VerifyReport",
    "verify_norm_ge_length",
    "sweep_norm_vs_length",
    "prop4_hypothesis",
    "prop6_condition",
    "verify_prop_length",
    "verify_prop_norm",
    "verify_thm_length_norm",
    "verify_thm_diam",
    "verify_cor_ubdiam",
    "corollary_euler",
    "family_ratio_unbounded",
    "standard_reports",
]

HOLDS = "holds"
EQUALITY = "equality"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"


def _fmt(x) -> str:
    return str(Fraction(x)) if not isinstance(x, str) else x

def _dec(x) -> str:
    return f"{float(x):.12g}"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check: exact values, a status, and any witnesses."""

    statement: str
    status: str
    lhs: str = ""
    rhs: str = ""
    relation: str = ""
    witnesses: tuple[str, ...] = ()
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    @property
    def summary(self) -> str:
        if self.relation and self.rhs:
            return f"{self.status}: {self.lhs} {self.relation} {self.rhs}"
        if self.lhs:
            return f"{self.status}: {self.lhs}"
        return self.status

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "witnesses": list(self.witnesses),
            "detail": self.detail,
        }

    def line(self) -> str:
        parts = [self.statement, self.status, self.lhs, self.relation, self.rhs]
        if self.witnesses:
            parts.append("witnesses=" + ",".join(self.witnesses))
        if self.detail:
            parts.append(self.detail)
        return "\t".join(parts)


# -- norm against length -----------------------------------------------------


def verify_norm_ge_length(m: ManifoldData, r: Slope) -> VerifyReport:
    """Check norm(r) >= (2/3) * length(r), exactly: 9*norm^2 >= 4*len^2."""
    stmt = f"thm1({r})"
    if m.cusp is None or m.norm is None:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="needs both cusp shape and norm data")
    n = m.norm.evaluate(r)
    len2 = m.cusp.squared_length(r)
    lhs = Fraction(9 * n * n)
    rhs = 4 * len2
    if lhs > rhs:
        status, rel = HOLDS, ">"
    elif lhs == rhs:
        status, rel = EQUALITY, "="
    else:
        status, rel = FAILS, "<"
    return VerifyReport(
        stmt, status, _fmt(lhs), _fmt(rhs), rel,
        witnesses=(str(r),),
        detail=f"norm = {n}, squared length = {_fmt(len2)}",
    )


def sweep_norm_vs_length(m: ManifoldData, limit: int) -> VerifyReport:
    """Run the thm1 comparison over every slope with |p|, q <= limit
    (meridian included) and aggregate the outcome."""
    stmt = f"thm1[range {limit}]"
    if m.cusp is None or m.norm is None:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="needs both cusp shape and norm data")
    total = passed = 0
    first_bad: Slope | None = None
    for r in enumerate_slopes(limit, limit):
        total += 1
        n = m.norm.evaluate(r)
        if 9 * n * n >= 4 * m.cusp.squared_length(r):
            passed += 1
        elif first_bad is None:
            first_bad = r
    status = HOLDS if passed == total else FAILS
    witnesses = (str(first_bad),) if first_bad is not None else ()
    return VerifyReport(stmt, status, f"{passed}/{total} slopes", witnesses=witnesses)


# -- surface-pair hypotheses ---------------------------------------------------


def prop4_hypothesis(m: ManifoldData) -> VerifyReport:
    """Search for two ideal-point surfaces with distinct slopes satisfying
    distance(s1, s2) >= 2*(-euler_i)/b_i for both; first such pair wins."""
    stmt = "prop4"
    candidates = sorted(
        (s for s in m.surfaces if s.ideal_point and s.euler < 0),
        key=lambda s: s.slope.sort_key(),
    )
    for s1, s2 in itertools.combinations(candidates, 2):
        if s1.slope == s2.slope:
            continue
        d = distance(s1.slope, s2.slope)
        if all(d * s.b + 2 * s.euler >= 0 for s in (s1, s2)):
            bound = max(Fraction(-s.euler, s.b) * 2 for s in (s1, s2))
            return VerifyReport(
                stmt, HOLDS, _fmt(d), _fmt(bound), ">=",
                witnesses=(str(s1.slope), str(s2.slope)),
                detail=(
                    f"distance {d} against 2*(-euler)/b = "
                    f"{_fmt(Fraction(-2 * s1.euler, s1.b))} and {_fmt(Fraction(-2 * s2.euler, s2.b))}"
                ),
            )
    return VerifyReport(
        stmt, FAILS,
        detail="no ideal-point surface pair satisfies the distance bound",
    )


def prop6_condition(s1: SurfaceData, s2: SurfaceData) -> VerifyReport:
    """Check 2*euler_i >= -b1*b2*distance(s1, s2) for both surfaces."""
    if s1.slope == s2.slope:
        raise ValueError("surfaces must have distinct slopes")
    stmt = f"prop6({s1.slope}, {s2.slope})"
    d = distance(s1.slope, s2.slope)
    rhs = -s1.b * s2.b * d
    slacks = [2 * s1.euler - rhs, 2 * s2.euler - rhs]
    if min(slacks) < 0:
        status, rel = FAILS, "<"
    elif min(slacks) == 0:
        status, rel = EQUALITY, "="
    else:
        status, rel = HOLDS, ">"
    detail = f"2*euler values {2 * s1.euler}, {2 * s2.euler}"
    if s1.b == 1 and s2.b == 1:
        pair_ok = all(d + 2 * s.euler >= 0 for s in (s1, s2))
        detail += f"; spanning pair, distance bound for the pair hypothesis: {'yes' if pair_ok else 'no'}"
    return VerifyReport(
        stmt, status, _fmt(min(2 * s1.euler, 2 * s2.euler)), _fmt(rhs), rel,
        witnesses=(str(s1.slope), str(s2.slope)),
        detail=detail,
    )


# -- triangle-type bounds on numerical slopes ---------------------------------


def verify_prop_length(lattice: CuspLattice, r1: Slope, r2: Slope) -> VerifyReport:
    """Check len(r1)/q1 + len(r2)/q2 > |r1 - r2| * len(meridian), exactly.

    The three radicands go through the exact square-root comparator.  When
    the lattice is flagged maximal, the weaker unit-meridian form with right
    side |r1 - r2| is reported as well.
    """
    if r1.is_meridian or r2.is_meridian:
        raise ValueError("infinite slope")
    stmt = f"prop-length({r1}, {r2})"
    v1, v2 = r1.value(), r2.value()
    a = lattice.squared_length(r1) / (r1.q * r1.q)
    b = lattice.squared_length(r2) / (r2.q * r2.q)
    c = (v1 - v2) ** 2 * lattice.g_mm
    sign = cmp_sqrt3(a, b, c)
    status, rel = {1: (HOLDS, ">"), 0: (EQUALITY, "="), -1: (FAILS, "<")}[sign]
    detail = f"decimals: {_dec(math.sqrt(a) + math.sqrt(b))} vs {_dec(math.sqrt(c))}"
    if lattice.maximal:
        unit_sign = cmp_sqrt3(a, b, (v1 - v2) ** 2)
        detail += f"; unit-meridian form (rhs |r1 - r2|): {'holds' if unit_sign > 0 else 'fails'}"
    return VerifyReport(
        stmt, status, f"sqrt({_fmt(a)}) + sqrt({_fmt(b)})", f"sqrt({_fmt(c)})", rel,
        witnesses=(str(r1), str(r2)),
        detail=detail,
    )


def verify_prop_norm(
    norm: CSNormData, r1: Slope, r2: Slope, slopes: BoundarySlopeSet
) -> VerifyReport:
    """Check norm(r1)/(q1*norm(m)) + norm(r2)/(q2*norm(m)) >= |r1 - r2|.

    When r1 sits at or above every boundary slope and r2 at or below, and no
    meridional weight is present, equality is forced; anything else there is
    reported as a failure of the data.
    """
    if r1.is_meridian or r2.is_meridian:
        raise ValueError("infinite slope")
    stmt = f"prop-norm({r1}, {r2})"
    nm = norm.meridian_norm()
    lhs = Fraction(norm.evaluate(r1), r1.q * nm) + Fraction(norm.evaluate(r2), r2.q * nm)
    rhs = abs(r1.value() - r2.value())
    if lhs > rhs:
        status, rel = HOLDS, ">"
    elif lhs == rhs:
        status, rel = EQUALITY, "="
    else:
        status, rel = FAILS, "<"
    detail = ""
    finite = slopes.finite
    bracketing = bool(finite) and r1.value() >= finite[-1].value() and r2.value() <= finite[0].value()
    if bracketing:
        if norm.has_meridian_term:
            detail = "equality not asserted (meridional weight present)"
        elif status != EQUALITY:
            status = FAILS
            detail = "expected equality: the pair brackets every boundary slope"
        else:
            detail = "extremal pair: equality expected and found"
    return VerifyReport(
        stmt, status, _fmt(lhs), _fmt(rhs), rel,
        witnesses=(str(r1), str(r2)),
        detail=detail,
    )


def verify_thm_length_norm(m: ManifoldData, r1: Slope, r2: Slope) -> VerifyReport:
    """Check the chain len(r1)/q1 + len(r2)/q2 > |r1 - r2| = norm side,
    for a pair bracketing every boundary slope on a maximal horotorus."""
    if r1.is_meridian or r2.is_meridian:
        raise ValueError("infinite slope")
    stmt = f"thm2({r1}, {r2})"
    if m.cusp is None or not m.cusp.maximal or m.norm is None:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="needs a maximal cusp shape and norm data")
    finite = m.boundary_slopes.finite
    if not finite:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="no finite boundary slopes")
    if r1.value() < finite[-1].value():
        return VerifyReport(
            stmt, NOT_APPLICABLE, witnesses=(str(finite[-1]),),
            detail=f"{r1} is below the maximal boundary slope {finite[-1]}",
        )
    if r2.value() > finite[0].value():
        return VerifyReport(
            stmt, NOT_APPLICABLE, witnesses=(str(finite[0]),),
            detail=f"{r2} is above the minimal boundary slope {finite[0]}",
        )
    v1, v2 = r1.value(), r2.value()
    a = m.cusp.squared_length(r1) / (r1.q * r1.q)
    b = m.cusp.squared_length(r2) / (r2.q * r2.q)
    c = (v1 - v2) ** 2
    sign = cmp_sqrt3(a, b, c)
    norm_report = verify_prop_norm(m.norm, r1, r2, m.boundary_slopes)
    norm_ok = norm_report.status == EQUALITY or (
        m.norm.has_meridian_term and norm_report.status == HOLDS
    )
    status = HOLDS if sign > 0 and norm_ok else FAILS
    detail = (
        f"length side {_dec(math.sqrt(a) + math.sqrt(b))}, "
        f"norm side {norm_report.lhs} ({norm_report.status})"
    )
    if r1.q == 1 and r2.q == 1:
        n1, n2 = m.norm.evaluate(r1), m.norm.evaluate(r2)
        nm = m.norm.meridian_norm()
        detail += (
            f"; integral form: len({r1}) + len({r2}) > "
            f"(norm {n1} + norm {n2}) / norm(m) {nm} = {_fmt(Fraction(n1 + n2, nm))}"
        )
    return VerifyReport(
        stmt, status, f"sqrt({_fmt(a)}) + sqrt({_fmt(b)})", _fmt(abs(v1 - v2)), ">",
        witnesses=(str(r1), str(r2)),
        detail=detail,
    )


# -- diameter bounds -----------------------------------------------------------


def verify_thm_diam(m: ManifoldData, r: Slope) -> VerifyReport:
    """Check diam > norm(r) / (q * norm(m)) strictly for a boundary slope r.

    The bound can never be met with equality on consistent data, so an exact
    tie is reported as a failure with diagnostics.
    """
    stmt = f"thm3({r})"
    if m.norm is None:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="no norm data")
    if r.is_meridian:
        raise ValueError("infinite slope")
    if r not in m.boundary_slopes:
        raise ValueError("not a boundary slope")
    d = m.boundary_slopes.diam()
    rhs = Fraction(m.norm.evaluate(r), r.q * m.norm.meridian_norm())
    if d > rhs:
        status, rel, detail = HOLDS, ">", ""
    elif d == rhs:
        status, rel = FAILS, "="
        detail = "bound met with equality; a strict inequality is required"
    else:
        status, rel, detail = FAILS, "<", "diameter below the norm bound"
    if m.norm.has_meridian_term and detail == "":
        detail = "meridional weight present"
    return VerifyReport(stmt, status, _fmt(d), _fmt(rhs), rel, witnesses=(str(r),), detail=detail)


def verify_cor_ubdiam(m: ManifoldData) -> VerifyReport:
    """Check the two-term upper bound on the diameter from the extremal
    boundary slopes, plus the doubled max-term form."""
    stmt = "cor-ubdiam"
    if m.norm is None or len(m.boundary_slopes.finite) < 2:
        return VerifyReport(stmt, NOT_APPLICABLE, detail="needs norm data and two finite boundary slopes")
    nm = m.norm.meridian_norm()
    finite = m.boundary_slopes.finite
    s_top, s_bot = finite[-1], finite[0]
    bound = Fraction(m.norm.evaluate(s_top), nm * s_top.q) + Fraction(
        m.norm.evaluate(s_bot), nm * s_bot.q
    )
    max_term = max(Fraction(m.norm.evaluate(s), nm * s.q) for s in finite)
    d = m.boundary_slopes.diam()
    if bound > d and 2 * max_term >= d:
        status, rel = HOLDS, ">"
    elif bound == d and 2 * max_term >= d:
        status, rel = EQUALITY, "="
    else:
        status, rel = FAILS, "<"
    return VerifyReport(
        stmt, status, _fmt(bound), _fmt(d), rel,
        witnesses=(str(s_top), str(s_bot)),
        detail=f"max form: 2 * {_fmt(max_term)} = {_fmt(2 * max_term)} vs {_fmt(d)}",
    )


def corollary_euler(
    r1: Slope, r2: Slope, s1: SurfaceData, s2: SurfaceData
) -> VerifyReport:
    """Check 6*((-e1)/(b1*q1) + (-e2)/(b2*q2)) > |r1 - r2| and its
    distance-form twin, both exactly in rationals."""
    if s1.slope != r1 or s2.slope != r2:
        raise ValueError("slope mismatch")
    if r1.is_meridian or r2.is_meridian:
        raise ValueError("infinite slope")
    if s1.euler >= 0 or s2.euler >= 0:
        raise ValueError("non-negative Euler characteristic")
    stmt = f"cor-euler({r1}, {r2})"
    lhs1 = 6 * (Fraction(-s1.euler, s1.b * r1.q) + Fraction(-s2.euler, s2.b * r2.q))
    rhs1 = abs(r1.value() - r2.value())
    lhs2 = 6 * (Fraction(r2.q * -s1.euler, s1.b) + Fraction(r1.q * -s2.euler, s2.b))
    rhs2 = distance(r1, r2)
    ok = lhs1 > rhs1 and lhs2 > rhs2
    return VerifyReport(
        stmt, HOLDS if ok else FAILS, _fmt(lhs1), _fmt(rhs1), ">" if ok else "<=",
        witnesses=(str(r1), str(r2)),
        detail=f"distance form: {_fmt(lhs2)} vs {rhs2}",
    )


def family_ratio_unbounded(n_values) -> VerifyReport:
    """Certified lower bounds (3n - 9)/6 on norm(m)/length(m) for the odd
    pretzel parameters n not divisible by 3; the bounds grow without bound."""
    ns = sorted(set(n_values))
    if not ns:
        raise ValueError("no parameters given")
    for n in ns:
        if not isinstance(n, int) or isinstance(n, bool) or n < 7 or n % 2 == 0 or n % 3 == 0:
            raise ValueError(f"invalid n: {n} (need odd n >= 7 with n not divisible by 3)")
    bounds = [Fraction(3 * n - 9, 6) for n in ns]
    increasing = all(x < y for x, y in zip(bounds, bounds[1:]))
    return VerifyReport(
        "ratio-unbounded",
        HOLDS if increasing else FAILS,
        ", ".join(_fmt(b) for b in bounds),
        "strictly increasing",
        "is" if increasing else "is not",
        witnesses=tuple(f"n={n}: {_fmt(b)}" for n, b in zip(ns, bounds)),
    )


# -- orchestration --------------------------------------------------------------


def standard_reports(m: ManifoldData, sweep_range: int | None = None) -> list[VerifyReport]:
    """Every applicable check on one manifold, in a deterministic order."""
    reports: list[VerifyReport] = []
    finite = m.boundary_slopes.finite

    if m.cusp is not None and m.norm is not None:
        checked = list(m.boundary_slopes)
        if MERIDIAN not in m.boundary_slopes:
            checked.append(MERIDIAN)
        for r in checked:
            reports.append(verify_norm_ge_length(m, r))
        if sweep_range:
            reports.append(sweep_norm_vs_length(m, sweep_range))

    if m.cusp is not None and m.cusp.maximal and m.norm is not None and finite:
        r1 = Slope(math.ceil(finite[-1].value()), 1)
        r2 = Slope(math.floor(finite[0].value()), 1)
        reports.append(verify_thm_length_norm(m, r1, r2))

    if len(finite) >= 2:
        top, bot = finite[-1], finite[0]
        if m.cusp is not None:
            reports.append(verify_prop_length(m.cusp, top, bot))
        if m.norm is not None:
            reports.append(verify_prop_norm(m.norm, top, bot, m.boundary_slopes))
            for r in finite:
                reports.append(verify_thm_diam(m, r))
            reports.append(verify_cor_ubdiam(m))

    if any(s.ideal_point and s.euler < 0 for s in m.surfaces):
        reports.append(prop4_hypothesis(m))

    surfaces = sorted(m.surfaces, key=lambda s: s.slope.sort_key())
    for s1, s2 in itertools.combinations(surfaces, 2):
        if s1.slope == s2.slope:
            continue
        reports.append(prop6_condition(s1, s2))
        if (
            not s1.slope.is_meridian
            and not s2.slope.is_meridian
            and s1.euler < 0
            and s2.euler < 0
        ):
            reports.append(corollary_euler(s1.slope, s2.slope, s1, s2))

    if m.cusp is not None:
        for s in surfaces:
            if s.euler < 0:
                ok = m.cusp.agol_check(s)
                reports.append(
                    VerifyReport(
                        f"length-bound({s.slope})",
                        HOLDS if ok else FAILS,
                        _fmt(m.cusp.squared_length(s.slope) * s.b * s.b),
                        _fmt(36 * s.euler * s.euler),
                        "<=" if ok else ">",
                        witnesses=(str(s.slope),),
                    )
                )
    return reports
