import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _brute import abelianization_invariants
from burniat.catalog import PINNED, get_entry, identify, load_catalog
from burniat.finitegroup import (
    FiniteGroup,
    GroupError,
    abelian_invariants,
    abelianization,
    fingerprint,
    isomorphism,
    normal_closure,
    quotient,
)


def cyclic(n):
    return FiniteGroup.from_permutations([[(i + 1) % n for i in range(n)]])


def product_table(ns):
    elems = list(itertools.product(*[range(n) for n in ns]))
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[tuple((a + b) % n for a, b, n in zip(x, y, ns))] for y in elems] for x in elems]
    return FiniteGroup.from_table(elems, np.array(table))


def relabel(g, perm):
    """The same group with elements renumbered by ``perm``."""
    n = g.order
    inv = np.argsort(perm)
    table = np.empty_like(g.table)
    for a in range(n):
        for b in range(n):
            table[perm[a], perm[b]] = perm[g.table[a, b]]
    return FiniteGroup.from_table([g.elements[i] for i in inv], table)


def test_catalog_loads_and_is_pinned():
    entries = load_catalog()
    assert len([e for e in entries if e.id[0] == 16]) == 14
    for gid, (abelian, center, inv) in PINNED.items():
        fp = get_entry(gid).fingerprint
        assert (fp.derived == 1) == abelian and fp.center == center and fp.abelian_invariants == inv


def test_catalog_pairwise_non_isomorphic():
    groups = [e.group() for e in load_catalog() if e.id[0] == 16]
    for g, h in itertools.combinations(groups, 2):
        assert isomorphism(g, h) is None


@pytest.mark.parametrize("entry", load_catalog(), ids=lambda e: e.label())
def test_catalog_axioms_and_self_identification(entry):
    g = entry.group()
    assert g.check_axioms(trials=1000)
    assert identify(g).entry.id == entry.id


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([e for e in load_catalog() if e.id[0] == 16]), st.randoms(use_true_random=False))
def test_identify_is_label_independent(entry, rnd):
    g = entry.group()
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = relabel(g, np.array(perm))
    ident = identify(h)
    assert ident.entry.id == entry.id
    phi = ident.witness
    target = entry.group()
    for a in range(h.order):
        for b in range(h.order):
            assert phi[h.mul(a, b)] == target.mul(phi[a], phi[b])


def test_abelian_invariants():
    assert abelian_invariants(product_table((2, 4, 2))) == (2, 2, 4)
    assert abelian_invariants(product_table((4, 6))) == (2, 12)
    assert abelian_invariants(cyclic(1)) == ()
    with pytest.raises(GroupError):
        abelian_invariants(get_entry((8, 3)).group())


@pytest.mark.parametrize("entry", [e for e in load_catalog() if e.id[0] == 16], ids=lambda e: e.label())
def test_abelianization_against_brute_force(entry):
    g = entry.group()
    assert abelian_invariants(abelianization(g)) == abelianization_invariants(g.table.tolist())


def test_quotient_and_normal_closure():
    d8 = get_entry((8, 3)).group()
    # the normal closure of a reflection in D8 has order 4
    refl = next(i for i in range(8) if d8.element_orders()[i] == 2 and i not in d8.center())
    n = normal_closure(d8, [refl])
    assert n.order == 4
    q = quotient(d8, n)
    assert q.order * n.order == d8.order
    assert q.check_axioms()


def test_quotient_rejects_non_normal():
    d8 = get_entry((8, 3)).group()
    refl = next(i for i in range(8) if d8.element_orders()[i] == 2 and i not in d8.center())
    with pytest.raises(GroupError):
        quotient(d8, d8.generated([refl]))


def test_fingerprint_roundtrip():
    fp = fingerprint(get_entry((16, 13)).group())
    assert type(fp).from_dict(fp.as_dict()) == fp
    assert dict(fp.histogram) == {1: 1, 2: 7, 4: 8}


def test_invalid_tables_rejected():
    with pytest.raises(GroupError):
        FiniteGroup.from_table([0, 1], np.array([[0, 0], [0, 0]]))


def test_isomorphism_order_limit():
    with pytest.raises(GroupError):
        isomorphism(cyclic(300), cyclic(300))
