import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat.f2space import (
    F2Hom,
    F2Subspace,
    F2Vector,
    all_vectors,
    enumerate_homs,
    kernel,
    meets_trivially,
)


def vectors(dim):
    return st.integers(0, (1 << dim) - 1).map(lambda b: F2Vector(b, dim))


def subspaces(dim, max_gens=4):
    return st.lists(vectors(dim), max_size=max_gens).map(lambda vs: F2Subspace.span(vs, dim))


def homs(dim, codim=2):
    return st.lists(st.integers(0, (1 << codim) - 1), min_size=dim, max_size=dim).map(
        lambda rows: F2Hom(tuple(rows), dim, codim)
    )


def brute_span(vs, dim):
    out = {F2Vector.zero(dim)}
    for v in vs:
        out |= {u + v for u in out}
    return out


def test_vector_tuple_roundtrip_and_lex_order():
    vs = list(all_vectors(3))
    assert [v.to_tuple() for v in vs] == list(itertools.product((0, 1), repeat=3))
    assert F2Vector.from_tuple((1, 0, 1)).bits == 0b101
    assert F2Vector.from_tuple((0, 1, 1))[0] == 0


def test_bad_vectors_rejected():
    with pytest.raises(ValueError):
        F2Vector.from_tuple((0, 2))
    with pytest.raises(ValueError):
        F2Vector(4, 2)
    with pytest.raises(ValueError):
        F2Vector.zero(2) + F2Vector.zero(3)


@given(st.lists(vectors(5), max_size=5))
def test_span_matches_brute_force(vs):
    s = F2Subspace.span(vs, 5)
    assert set(s.elements()) == brute_span(vs, 5)
    assert len(s.elements()) == 2**s.dim


@given(subspaces(6), subspaces(6))
def test_sum_and_intersection_dimensions(a, b):
    assert (a + b).dim + a.intersection(b).dim == a.dim + b.dim
    assert set(a.intersection(b).elements()) == set(a.elements()) & set(b.elements())
    assert meets_trivially(a, b) == (a.intersection(b).dim == 0)


@given(homs(6))
def test_kernel_is_exactly_the_null_set(h):
    k = kernel(h)
    zero = F2Vector.zero(2)
    assert set(k.elements()) == {v for v in all_vectors(6) if h(v) == zero}
    assert k.dim == 6 - h.rank()


def test_hom_matrix_roundtrip():
    m = [(1, 0), (1, 1), (0, 1), (0, 1), (1, 1)]
    h = F2Hom.from_matrix(m)
    assert h.matrix() == m
    assert h(F2Vector.from_tuple((1, 1, 0, 0, 0))).to_tuple() == (0, 1)


@settings(max_examples=30)
@given(st.lists(vectors(4).filter(bool), max_size=3), st.data())
def test_enumerate_homs_matches_filter(avoid_vs, data):
    avoid = [F2Subspace.span([v], 4) for v in avoid_vs]
    special = data.draw(st.none() | st.lists(vectors(4).filter(bool), min_size=1, max_size=3))
    found = enumerate_homs(4, avoid=avoid, exactly_one_of=special)
    expected = []
    for rows in itertools.product(range(4), repeat=4):
        h = F2Hom(rows, 4, 2)
        k = kernel(h)
        if any(v in k for v in avoid_vs):
            continue
        if special is not None and sum(v in k for v in special) != 1:
            continue
        expected.append(h)
    assert [h.rows for h in found] == [h.rows for h in expected]
    assert [h.rows for h in found] == sorted(h.rows for h in found)


def test_prescribed_images():
    w = F2Vector.from_tuple((1, 0, 0))
    x = F2Vector.from_tuple((0, 1))
    found = enumerate_homs(3, prescribed=[(w, x)])
    assert len(found) == 16
    assert all(h(w) == x for h in found)
