import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation
from sympy.combinatorics.perm_groups import PermutationGroup as SymPyGroup

from benthad.perm_group import PermutationGroup, compose, identity, invert


def test_trivial_group():
    g = PermutationGroup([], degree=4)
    assert g.order() == 1
    assert list(g.elements()) == [identity(4)]


def test_symmetric_group():
    g = PermutationGroup([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)])
    assert g.order() == 120
    assert len(set(g.elements())) == 120


def test_membership():
    g = PermutationGroup([(1, 2, 0, 3)])
    assert (2, 0, 1, 3) in g
    assert (1, 0, 2, 3) not in g
    assert g.orbits() == [[0, 1, 2], [3]]


def test_compose_convention():
    a, b = (1, 2, 0), (1, 0, 2)
    # a after b
    assert compose(a, b) == tuple(a[b[x]] for x in range(3))
    assert compose(a, invert(a)) == identity(3)


perms = st.integers(2, 9).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=3))


@settings(max_examples=60, deadline=None)
@given(perms)
def test_order_matches_sympy(gens):
    ours = PermutationGroup(gens)
    ref = SymPyGroup([Permutation(list(g)) for g in gens])
    assert ours.order() == ref.order()
    assert len(ours.orbits()) == len(ref.orbits())


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=2)))
def test_elements_are_closed_and_distinct(gens):
    g = PermutationGroup(gens)
    els = set(g.elements())
    assert len(els) == g.order()
    for a in list(els)[:20]:
        for s in g.generators:
            assert compose(s, a) in els
    n = g.degree
    others = [p for p in itertools.permutations(range(n)) if p not in els]
    assert all(not g.contains(p) for p in others[:50])


def test_bad_generators():
    with pytest.raises(ValueError):
        PermutationGroup([(0, 0, 1)])
