import random

import pytest

from slopenorm import (
    EQUALITY,
    FAILS,
    HOLDS,
    MERIDIAN,
    NOT_APPLICABLE,
    BoundarySlopeSet,
    CSNormData,
    CuspLattice,
    ManifoldData,
    Slope,
    SurfaceData,
    corollary_euler,
    family_ratio_unbounded,
    fig8_dataset,
    pretzel_dataset,
    prop4_hypothesis,
    prop6_condition,
    standard_reports,
    verify_cor_ubdiam,
    verify_norm_ge_length,
    verify_prop_length,
    verify_prop_norm,
    verify_thm_diam,
    verify_thm_length_norm,
)
from randgen import random_lattice, random_norm_data, random_slope_pair

FIG8 = fig8_dataset()


# -- thm1 ---------------------------------------------------------------------

def test_thm1_fig8_slopes():
    rep = verify_norm_ge_length(FIG8, Slope(4, 1))
    assert rep.status == HOLDS
    assert rep.lhs == "2304" and rep.rhs == "112"
    rep = verify_norm_ge_length(FIG8, MERIDIAN)
    assert rep.status == HOLDS
    assert rep.lhs == "144" and rep.rhs == "4"


def test_thm1_needs_data():
    rep = verify_norm_ge_length(pretzel_dataset(7), Slope(16, 1))
    assert rep.status == NOT_APPLICABLE


# -- prop4 ---------------------------------------------------------------------

def test_prop4_pretzel7():
    rep = prop4_hypothesis(pretzel_dataset(7))
    assert rep.status == HOLDS
    assert rep.witnesses == ("16/1", "20/1")


def test_prop4_no_surfaces_fails_with_empty_witness():
    rep = prop4_hypothesis(FIG8)
    assert rep.status == FAILS
    assert rep.witnesses == ()


def test_prop4_insufficient_distance_fails():
    s1, s2 = Slope(0, 1), Slope(1, 1)
    m = ManifoldData(
        name="tight",
        boundary_slopes=BoundarySlopeSet((s1, s2)),
        surfaces=(
            SurfaceData(s1, euler=-5, b=1, ideal_point=True),
            SurfaceData(s2, euler=-5, b=1, ideal_point=True),
        ),
    )
    assert prop4_hypothesis(m).status == FAILS  # distance 1 < 10


# -- prop6 ---------------------------------------------------------------------

def test_prop6_boundary_case():
    s1 = SurfaceData(Slope(0, 1), euler=-2, b=1)
    s2 = SurfaceData(Slope(4, 1), euler=-1, b=1)
    rep = prop6_condition(s1, s2)
    assert rep.status == EQUALITY  # 2*(-2) = -4 = -1*1*4


def test_prop6_violation():
    s1 = SurfaceData(Slope(0, 1), euler=-3, b=1)
    s2 = SurfaceData(Slope(4, 1), euler=-1, b=1)
    assert prop6_condition(s1, s2).status == FAILS  # -6 < -4


def test_prop6_pretzel7():
    m = pretzel_dataset(7)
    rep = prop6_condition(m.surfaces[0], m.surfaces[1])
    assert rep.status == HOLDS  # 2*(-1) = -2 > -4
    assert "spanning pair" in rep.detail and "yes" in rep.detail


def test_prop6_same_slope_rejected():
    s = SurfaceData(Slope(0, 1), euler=-1, b=1)
    with pytest.raises(ValueError, match="distinct slopes"):
        prop6_condition(s, s)


# -- prop-length -----------------------------------------------------------------

def test_prop_length_fig8():
    rep = verify_prop_length(FIG8.cusp, Slope(4, 1), Slope(-4, 1))
    assert rep.status == HOLDS
    assert "unit-meridian form" in rep.detail and "holds" in rep.detail


def test_prop_length_square_lattice():
    rep = verify_prop_length(CuspLattice(1, 0, 1), Slope(1, 1), Slope(0, 1))
    assert rep.status == HOLDS  # sqrt2 + 1 > 1


def test_prop_length_degenerate_pair():
    rep = verify_prop_length(FIG8.cusp, Slope(4, 1), Slope(4, 1))
    assert rep.status == HOLDS  # positive left side, zero right side


def test_prop_length_meridian_rejected():
    with pytest.raises(ValueError, match="infinite slope"):
        verify_prop_length(FIG8.cusp, MERIDIAN, Slope(0, 1))


def test_prop_length_random_strict():
    rng = random.Random(41)
    for _ in range(200):
        lattice = random_lattice(rng)
        r1, r2 = random_slope_pair(rng, 30, 30, finite=True)
        assert verify_prop_length(lattice, r1, r2).status == HOLDS


# -- prop-norm -------------------------------------------------------------------

def test_prop_norm_fig8_equality_cases():
    rep = verify_prop_norm(FIG8.norm, Slope(5, 1), Slope(-5, 1), FIG8.boundary_slopes)
    assert rep.status == EQUALITY
    assert rep.lhs == "10" and rep.rhs == "10"
    rep = verify_prop_norm(FIG8.norm, Slope(4, 1), Slope(-4, 1), FIG8.boundary_slopes)
    assert rep.status == EQUALITY
    assert rep.lhs == "8" and rep.rhs == "8"


def test_prop_norm_strict_case():
    rep = verify_prop_norm(FIG8.norm, Slope(0, 1), Slope(0, 1), FIG8.boundary_slopes)
    assert rep.status == HOLDS
    assert rep.lhs == "8" and rep.rhs == "0"


def test_prop_norm_meridian_weight_degrades():
    norm = CSNormData(((MERIDIAN, 2), (Slope(0, 1), 2)))
    bset = BoundarySlopeSet((MERIDIAN, Slope(0, 1)))
    rep = verify_prop_norm(norm, Slope(3, 1), Slope(-3, 1), bset)
    assert rep.status in (HOLDS, EQUALITY)
    assert "not asserted" in rep.detail
    # the meridian term genuinely breaks equality here
    assert rep.status == HOLDS


def test_prop_norm_random():
    rng = random.Random(42)
    for _ in range(200):
        norm = random_norm_data(rng)
        bset = BoundarySlopeSet(norm.support)
        r1, r2 = random_slope_pair(rng, 60, 8, finite=True)
        rep = verify_prop_norm(norm, r1, r2, bset)
        assert rep.ok
        hi = max(s.value() for s in norm.support)
        lo = min(s.value() for s in norm.support)
        if r1.value() >= hi and r2.value() <= lo:
            assert rep.status == EQUALITY


# -- thm2 ------------------------------------------------------------------------

def test_thm2_fig8():
    rep = verify_thm_length_norm(FIG8, Slope(4, 1), Slope(-4, 1))
    assert rep.status == HOLDS
    assert "integral form" in rep.detail
    rep = verify_thm_length_norm(FIG8, Slope(6, 1), Slope(-6, 1))
    assert rep.status == HOLDS


def test_thm2_extremality_precondition():
    rep = verify_thm_length_norm(FIG8, Slope(0, 1), Slope(-4, 1))
    assert rep.status == NOT_APPLICABLE
    assert rep.witnesses == ("4/1",)
    rep = verify_thm_length_norm(FIG8, Slope(4, 1), Slope(0, 1))
    assert rep.status == NOT_APPLICABLE
    assert rep.witnesses == ("-4/1",)


def test_thm2_needs_maximal_cusp():
    bare = ManifoldData(
        name="no-cusp",
        boundary_slopes=FIG8.boundary_slopes,
        norm=FIG8.norm,
    )
    assert verify_thm_length_norm(bare, Slope(4, 1), Slope(-4, 1)).status == NOT_APPLICABLE


def test_thm2_meridian_rejected():
    with pytest.raises(ValueError, match="infinite slope"):
        verify_thm_length_norm(FIG8, MERIDIAN, Slope(0, 1))


# -- thm3 ------------------------------------------------------------------------

def test_thm3_fig8():
    for r in (Slope(4, 1), Slope(-4, 1)):
        rep = verify_thm_diam(FIG8, r)
        assert rep.status == HOLDS
        assert rep.summary == "holds: 8 > 4"


def test_thm3_synthetic():
    norm = CSNormData(((Slope(0, 1), 2), (Slope(2, 1), 2)))
    m = ManifoldData(
        name="synthetic",
        boundary_slopes=BoundarySlopeSet((Slope(0, 1), Slope(2, 1))),
        norm=norm,
    )
    rep = verify_thm_diam(m, Slope(0, 1))
    assert rep.status == HOLDS
    assert rep.lhs == "2" and rep.rhs == "1"


def test_thm3_not_boundary_slope():
    with pytest.raises(ValueError, match="not a boundary slope"):
        verify_thm_diam(FIG8, Slope(1, 2))


def test_thm3_random_strict():
    rng = random.Random(44)
    for _ in range(100):
        norm = random_norm_data(rng)
        m = ManifoldData(
            name="r",
            boundary_slopes=BoundarySlopeSet(norm.support),
            norm=norm,
        )
        for r in norm.support:
            assert verify_thm_diam(m, r).status == HOLDS


# -- cor-ubdiam --------------------------------------------------------------------

def test_cor_ubdiam_fig8():
    rep = verify_cor_ubdiam(FIG8)
    assert rep.status == EQUALITY
    assert rep.lhs == "8" and rep.rhs == "8"
    assert "max form: 2 * 4 = 8" in rep.detail


def test_cor_ubdiam_synthetic():
    norm = CSNormData(((Slope(0, 1), 2), (Slope(2, 1), 2)))
    m = ManifoldData(
        name="synthetic",
        boundary_slopes=BoundarySlopeSet((Slope(0, 1), Slope(2, 1))),
        norm=norm,
    )
    rep = verify_cor_ubdiam(m)
    assert rep.status == EQUALITY
    assert rep.lhs == "2" and rep.rhs == "2"


def test_cor_ubdiam_random_upper_bound():
    rng = random.Random(45)
    for _ in range(100):
        norm = random_norm_data(rng)
        m = ManifoldData(
            name="r", boundary_slopes=BoundarySlopeSet(norm.support), norm=norm
        )
        assert verify_cor_ubdiam(m).ok


# -- cor-euler ---------------------------------------------------------------------

def test_cor_euler_pretzel7():
    m = pretzel_dataset(7)
    s1, s2 = m.surfaces
    rep = corollary_euler(s1.slope, s2.slope, s1, s2)
    assert rep.status == HOLDS
    assert rep.lhs == "12" and rep.rhs == "4"
    assert "distance form: 12 vs 4" in rep.detail


def test_cor_euler_large_slack():
    s1 = SurfaceData(Slope(0, 1), euler=-100, b=1)
    s2 = SurfaceData(Slope(4, 1), euler=-1, b=1)
    assert corollary_euler(Slope(0, 1), Slope(4, 1), s1, s2).status == HOLDS


def test_cor_euler_errors():
    s1 = SurfaceData(Slope(0, 1), euler=-1, b=1)
    s2 = SurfaceData(Slope(4, 1), euler=-1, b=1)
    with pytest.raises(ValueError, match="slope mismatch"):
        corollary_euler(Slope(1, 1), Slope(4, 1), s1, s2)
    flat = SurfaceData(Slope(4, 1), euler=0, b=1)
    with pytest.raises(ValueError, match="non-negative Euler characteristic"):
        corollary_euler(Slope(0, 1), Slope(4, 1), s1, flat)


# -- ratio growth -------------------------------------------------------------------

def test_family_ratio_values():
    rep = family_ratio_unbounded([7, 13])
    assert rep.status == HOLDS
    assert rep.witnesses == ("n=7: 2", "n=13: 5")


def test_family_ratio_invalid_n():
    for bad in (9, 5, 8, 15):
        with pytest.raises(ValueError, match="invalid n"):
            family_ratio_unbounded([7, bad])


# -- orchestration ------------------------------------------------------------------

def test_standard_reports_fig8_all_ok():
    reports = standard_reports(FIG8)
    assert reports
    assert all(r.ok for r in reports)
    statements = {r.statement for r in reports}
    assert "thm1(4/1)" in statements
    assert "thm2(4/1, -4/1)" in statements
    assert "thm3(4/1)" in statements
    assert "cor-ubdiam" in statements


def test_standard_reports_pretzel_all_ok():
    reports = standard_reports(pretzel_dataset(7))
    assert reports
    assert all(r.ok for r in reports)
    statements = {r.statement for r in reports}
    assert "prop4" in statements
    assert any(s.startswith("prop6") for s in statements)
    assert any(s.startswith("cor-euler") for s in statements)


def test_report_serialization():
    rep = verify_thm_diam(FIG8, Slope(4, 1))
    d = rep.to_dict()
    assert d["statement"] == "thm3(4/1)"
    assert d["status"] == "holds"
    assert d["lhs"] == "8" and d["rhs"] == "4"
    assert d["witnesses"] == ["4/1"]
    assert "thm3(4/1)\tholds\t8\t>\t4" in rep.line()
