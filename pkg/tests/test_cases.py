from dataclasses import replace

import pytest

from burniat.actions import ActionElement
from burniat.affine import AffineElement
from burniat.cases import CASE_IDS, CaseDataError, check_case, get_case, group_mod_lattice, load_cases


def test_all_cases_load_and_check():
    cases = load_cases()
    assert tuple(cases) == CASE_IDS
    for c in cases.values():
        check_case(c)
        assert c.span().dim == 4
        assert c.g0.d == (-1, -1, -1)


def test_group_mod_lattice_is_the_sign_group():
    for cid in CASE_IDS:
        c = get_case(cid)
        group = group_mod_lattice(c.generators)
        assert len(group) == 16
        assert {g.to_action() for g in group} == {ActionElement.from_v6(v) for v in c.span().elements()}


def test_published_offsets_present_for_three_cases():
    assert [cid for cid in CASE_IDS if get_case(cid).lambda_hats is not None] == ["A", "D", "E"]


def test_unknown_case():
    with pytest.raises(KeyError):
        get_case("H")


def test_check_case_rejects_wrong_fixed_element():
    c = get_case("A")
    bad = replace(c, fixed_element=ActionElement(1, 0, 0, 1, 0, 1, 0))
    with pytest.raises(CaseDataError):
        check_case(bad)


def test_check_case_rejects_translation_without_sign_action():
    c = get_case("A")
    gens = list(c.generators)
    gens[1] = AffineElement((1, 1, 1), (1, 0, 0, 0, 0, 0))
    with pytest.raises(CaseDataError):
        check_case(replace(c, generators=tuple(gens)))
