import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burniat.actions import Group, iter_dim0
from burniat.affine import AffineElement
from burniat.cases import CASE_IDS, get_case, group_mod_lattice
from burniat.legendre import (
    CALIBRATED_BRANCH,
    INF,
    SEEDS,
    ZERO,
    BranchAmbiguity,
    LegendreValue,
    QuarterPoint,
    action_meets,
    fixed_quarter_points,
    is_transversal,
    legendre_value,
    nodal_data,
    on_base_locus,
    on_xhat,
    value_table,
)
from burniat.pi1 import pi1_from_offsets

quarter_pairs = st.tuples(st.integers(0, 3), st.integers(0, 3))


def test_seeds_are_in_the_table():
    table = value_table()
    assert len(table) == 16
    assert all(table[p] == v for p, v in SEEDS.items())


@given(quarter_pairs)
def test_functional_equations(p):
    n, m = p
    v = legendre_value(n, m)
    assert legendre_value(-n, -m) == v
    assert legendre_value(n + 2, m) == v.negate()
    assert legendre_value(n, m + 2) == v.invert_a()
    assert legendre_value(n + 4, m + 4) == v


def test_zeros_and_poles():
    zeros = {p for p, v in value_table().items() if v == ZERO}
    poles = {p for p, v in value_table().items() if v == INF}
    assert zeros == {(1, 0), (3, 0)}
    assert poles == {(1, 2), (3, 2)}


def test_value_strings():
    assert str(legendre_value(1, 1)) == "i*sigma*b"
    assert str(legendre_value(0, 2)) == "a"
    assert str(legendre_value(2, 0)) == "-1"
    with pytest.raises(ValueError):
        LegendreValue("zero", k=1)


@pytest.mark.parametrize("case_id", CASE_IDS)
def test_counts(case_id):
    nd = nodal_data(case_id)
    assert len(nd.fixed_points) == 64
    assert len(nd.on_xhat) == 32
    assert [len(o) for o in nd.orbits] == [8, 8, 8, 8]
    assert is_transversal(case_id, nd.lambda_hats)


@pytest.mark.parametrize("case_id", ["A", "D", "E"])
def test_offsets_match_published(case_id):
    assert set(nodal_data(case_id).lambda_hats) == set(get_case(case_id).lambda_hats)
    assert is_transversal(case_id, get_case(case_id).lambda_hats)


@pytest.mark.parametrize("case_id", CASE_IDS)
def test_hypersurface_is_group_invariant(case_id):
    nd = nodal_data(case_id)
    on = set(nd.on_xhat)
    for g in group_mod_lattice(get_case(case_id).generators):
        assert {p.act(g) for p in on} == on


def test_branch_needed_only_where_sigma_enters():
    nodal_data("A", branch=None)
    with pytest.raises(BranchAmbiguity):
        nodal_data("E", branch=None)


@pytest.mark.parametrize("case_id", ["A", "D", "E"])
def test_fundamental_group_does_not_depend_on_the_branch(case_id):
    ids = set()
    for br in itertools.product((1, -1), repeat=3):
        nd = nodal_data(case_id, br)
        ids.add(pi1_from_offsets(get_case(case_id), nd.lambda_hats).catalog_id)
    assert len(ids) == 1


def test_calibrated_branch_reproduces_published_offsets():
    assert set(nodal_data("E", CALIBRATED_BRANCH).lambda_hats) == set(get_case("E").lambda_hats)


def test_fixed_quarter_points_are_fixed():
    g = get_case("D").g0
    pts = fixed_quarter_points(g)
    assert len(set(pts)) == 64
    assert all(p.act(g) == p for p in pts)
    with pytest.raises(ValueError):
        fixed_quarter_points(AffineElement.identity())


def test_base_locus_is_on_every_member():
    for q in itertools.product(range(4), repeat=6):
        p = QuarterPoint(q)
        if on_base_locus(p):
            assert on_xhat(p)


def test_exact_verdicts_for_isolated_elements():
    verdicts = {str(e): action_meets(e) for e in iter_dim0(Group.G0)}
    assert sum(verdicts.values()) == 7
    assert verdicts["100 100 100"] is False


def test_point_string():
    assert str(QuarterPoint((3, 1, 0, 1, 1, 1))) == "(3/4+tau/4, tau/4, 1/4+tau/4)"
