import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat.actions import ELEMENT_10, Context, Group, labelled_element, per_curve_components
from burniat.cases import CASE_IDS, get_case
from burniat.legendre import nodal_data
from burniat.numoracle import (
    GENERICITY_MARGIN,
    CurvePoint,
    OracleError,
    PrecisionError,
    Tolerances,
    case_counts,
    classify_residual,
    count_on_base_locus_numeric,
    count_on_xhat_numeric,
    eight_equations_residual,
    fixed_points_on_curve,
    fixed_points_on_T_numeric,
    is_smooth,
    meets_numeric,
    point_from_parameter,
    points_with_vanishing_coordinate,
    random_curve,
    random_curves,
    verify_delpezzo_lemma,
)

nonzero = st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False)


def test_curves_are_deterministic_and_generic():
    a, b = random_curves(7), random_curves(7)
    assert [c.a for c in a] == [c.a for c in b]
    assert random_curves(8)[0].a != a[0].a
    assert all(c.margin >= GENERICITY_MARGIN for c in a)


def test_margin_that_cannot_be_met():
    with pytest.raises(OracleError):
        random_curve(1, margin=100)


@pytest.mark.parametrize("seed", range(100))
def test_sampled_curves_are_smooth(seed):
    assert all(is_smooth(c) for c in random_curves(seed))


@pytest.mark.parametrize("j", range(4))
def test_vanishing_coordinate_points(j):
    params = random_curve(3)
    pts = points_with_vanishing_coordinate(params, j)
    assert len(pts) == 4
    for p in pts:
        assert abs(p.coords[j]) < 1e-12
        assert p.residual(params) < 1e-10
    for p, q in zip(pts, pts[1:]):
        assert not p.close_to(q)
    if j == 3:
        # x1^2 + x2^2 = 0 forces x2 = +-i x1
        for p in pts:
            _, x1, x2, _ = p.coords
            assert min(abs(x2 - 1j * x1), abs(x2 + 1j * x1)) < 1e-12


@settings(deadline=None)
@given(nonzero, nonzero, nonzero, nonzero, st.integers(1, 50))
def test_residual_is_scale_invariant(c1, c2, c3, lam, seed):
    curves = random_curves(seed)
    rng = np.random.default_rng(seed)
    pts = [point_from_parameter(c, complex(*rng.normal(size=2)), 1) for c in curves]
    base = eight_equations_residual(*pts, lam)
    scaled = [CurvePoint(p.coords * c) for p, c in zip(pts, (c1, c2, c3))]
    assert eight_equations_residual(*scaled, lam) == pytest.approx(base, rel=1e-9, abs=1e-14)


def test_projective_points_normalize():
    p = CurvePoint(np.array([0, 2j, 0, 1]))
    q = CurvePoint(np.array([0, 1, 0, -0.5j]))
    assert p.close_to(q)
    with pytest.raises(ValueError):
        CurvePoint(np.zeros(4))


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("lam", [1, 2.5 - 0.7j])
def test_lemma(seed, lam):
    rep = verify_delpezzo_lemma(seed, 200, lam)
    assert rep.passed
    assert rep.max_on_residual < 1e-9
    assert rep.min_off_residual > 1e-3


def test_lemma_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_delpezzo_lemma(1, 10, lam=0)
    with pytest.raises(ValueError):
        verify_delpezzo_lemma(1, 0)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_element_10_misses_the_hypersurface(seed):
    curves = random_curves(seed)
    assert len(fixed_points_on_T_numeric(ELEMENT_10, curves)) == 64
    assert count_on_xhat_numeric(ELEMENT_10, curves) == 0
    assert count_on_base_locus_numeric(ELEMENT_10, curves) == 0


def test_fixed_points_are_fixed():
    curves = random_curves(1)
    e = labelled_element(Group.G0, 11)
    for s, c in zip(per_curve_components(e), curves):
        pts = fixed_points_on_curve(s, c)
        assert len(pts) == 4
        assert all(p.act(s).close_to(p) for p in pts)
    with pytest.raises(ValueError):
        fixed_points_on_T_numeric(labelled_element(Group.G0, 1), curves)


def test_meets_numeric_verdicts():
    assert meets_numeric(labelled_element(Group.G0, 11), Context.XHAT, 1)
    assert not meets_numeric(ELEMENT_10, Context.XHAT, 1)
    assert meets_numeric(labelled_element(Group.G1, 12), Context.BASE_LOCUS, 2)


def test_residual_classification():
    assert classify_residual(1e-12) is True
    assert classify_residual(1e-2) is False
    with pytest.raises(PrecisionError):
        classify_residual(1e-6)
    assert classify_residual(1e-6, Tolerances(membership=1e-5)) is True


def test_tolerances_validated():
    with pytest.raises(ValueError):
        Tolerances(membership=1e-3, band_ceiling=1e-4)
    with pytest.raises(ValueError):
        Tolerances(membership=0)
    with pytest.raises(ValueError):
        Tolerances(cluster=0)


def test_band_that_catches_off_points_raises():
    # a ceiling above the off-residuals forces a precision error
    with pytest.raises(PrecisionError):
        count_on_xhat_numeric(labelled_element(Group.G0, 11), random_curves(1), tol=Tolerances(band_ceiling=10.0))


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("cid", CASE_IDS)
def test_case_counts_agree_with_exact(cid, seed):
    c = case_counts(get_case(cid), seed)
    nd = nodal_data(cid)
    assert (c.on_t, c.on_xhat) == (len(nd.fixed_points), len(nd.on_xhat)) == (64, 32)
    assert c.orbit_sizes == sorted(len(o) for o in nd.orbits) == [8, 8, 8, 8]
    assert c.max_on_residual < 1e-9 and c.min_off_residual > 1e-3
