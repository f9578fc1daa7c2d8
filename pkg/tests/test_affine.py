import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from burniat.actions import Group, group_elements
from burniat.affine import (
    AffineElement,
    decode,
    encode,
    lattice_basis,
    mul_codes,
    swap_real_tau,
)

signs = st.tuples(*[st.sampled_from((1, -1))] * 3)
translations = st.tuples(*[st.integers(0, 3)] * 6)
elements = st.builds(AffineElement, signs, translations)
quarters = st.tuples(*[st.integers(0, 3)] * 6)


@given(elements, elements, elements)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements)
def test_inverse(a):
    e = AffineElement.identity()
    assert a * a.inverse() == e == a.inverse() * a


@given(elements, elements)
def test_codes_multiply_like_elements(a, b):
    assert decode(encode(a.d, a.t)) == a
    prod = mul_codes(np.array([a.code()]), np.array([b.code()]))
    assert decode(int(prod[0])) == a * b


@given(elements, elements, quarters)
def test_quarter_action_is_an_action(a, b, q):
    assert (a * b).act_on_quarter(q) == a.act_on_quarter(b.act_on_quarter(q))


@given(st.sampled_from(group_elements(Group.G0)))
def test_sign_lift_roundtrip(e):
    assert AffineElement.from_action(e).to_action() == e


def test_sign_dictionary():
    # single flips on curve 1: x3 -> -z + 1/2, x1 -> -z + tau/2, x0 -> -z
    from burniat.actions import ActionElement

    assert str(AffineElement.from_action(ActionElement(0, 0, 1, 0, 1, 0, 0))).startswith("(-z+1/2,")
    assert str(AffineElement.from_action(ActionElement(0, 1, 0, 0, 0, 0, 0))) == "(-z+tau/2, -z+tau/2, -z+tau/2)"
    assert AffineElement.from_action(ActionElement(1, 0, 0, 0, 0, 0, 0)).d == (-1, 1, 1)


def test_lattice_translations():
    basis = lattice_basis()
    assert len(basis) == 6
    assert all(b.is_lattice_translation() and b.order() == 2 for b in basis)
    assert AffineElement.lattice((1, 0, 0, 0, 0, 1)).t == (2, 0, 0, 0, 0, 2)


@given(elements)
def test_negating_elements_square_to_identity(a):
    if a.d == (-1, -1, -1):
        assert a * a == AffineElement.identity()


@given(elements, st.permutations(range(3)))
def test_curve_permutation_is_a_homomorphism(a, perm):
    b = AffineElement.from_code(a.inverse().code())
    assert (a * b).permute_curves(perm) == a.permute_curves(perm) * b.permute_curves(perm)


def test_swap_real_tau():
    assert swap_real_tau((1, 0, 0, 0, 0, 1)) == (0, 1, 0, 0, 1, 0)
