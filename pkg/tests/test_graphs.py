import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from benthad import HadamardMatrix, paley, sylvester
from benthad.errors import SizeLimit
from benthad.graphs import (
    ColoredDigraph,
    automorphisms,
    find_isomorphism,
    gamma_graph,
    pair_graph,
    strong_graph,
)


def brute_aut_count(g):
    return sum(g.is_automorphism(p) for p in itertools.permutations(range(g.n)))


def test_strong_graph_order_one():
    g = strong_graph(HadamardMatrix([[1]]))
    assert g.n == 2 and g.arcs == {(0, 0), (1, 1)}
    g = strong_graph(HadamardMatrix([[-1]]))
    assert g.arcs == {(0, 1), (1, 0)}


def test_strong_graph_arc_count(s4, s16):
    assert strong_graph(s4).n == 8
    assert len(strong_graph(s4).arcs) == 2 * 4 * 4
    assert len(strong_graph(s16).arcs) == 2 * 16 * 16


def test_gamma_graph():
    g = gamma_graph(sylvester(1))
    assert g.arcs == {(1, 1)}
    n = paley(17, "II")
    arcs = gamma_graph(n).arcs
    assert all((b, a) in arcs for a, b in arcs)
    assert not any(a == 0 for a, _ in gamma_graph(sylvester(3)).arcs)


def test_pair_graph_order_one():
    g = pair_graph(HadamardMatrix([[1]]))
    # r+ c+ and r- c-, both directions
    assert g.arcs == {(0, 2), (2, 0), (1, 3), (3, 1)}
    assert g.colors == (0, 0, 1, 1)


def test_small_groups():
    cycle = ColoredDigraph(3, frozenset({(0, 1), (1, 2), (2, 0)}), (0, 0, 0))
    assert automorphisms(cycle).group.order() == 3
    for n in (1, 2, 5, 7):
        empty = ColoredDigraph(n, frozenset(), (0,) * n)
        assert automorphisms(empty).group.order() == math.factorial(n)


def test_graph_limit():
    g = ColoredDigraph(5, frozenset(), (0,) * 5)
    with pytest.raises(SizeLimit):
        automorphisms(g, graph_limit=4)


def _random_graph(n, seed, colors=2, with_blocks=False, density=0.4):
    rng = np.random.default_rng(seed)
    adj = rng.random((n, n)) < density
    cols = rng.integers(0, colors, n)
    blocks = None
    if with_blocks:
        perm = rng.permutation(n)
        blocks = [(int(perm[2 * i]), int(perm[2 * i + 1])) for i in range(n // 2)]
        for a, b in blocks:
            cols[b] = cols[a]
    return ColoredDigraph.from_adjacency(adj, cols, blocks)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1), st.integers(1, 3), st.floats(0.0, 1.0))
def test_order_matches_brute_force(n, seed, colors, density):
    g = _random_graph(n, seed, colors, density=density)
    res = automorphisms(g)
    assert res.group.order() == brute_aut_count(g)
    assert all(g.is_automorphism(p) for p in res.group.generators)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 4, 6, 8]), st.integers(0, 2**32 - 1))
def test_order_with_blocks_matches_brute_force(n, seed):
    g = _random_graph(n, seed, 1, with_blocks=True, density=0.5)
    assert automorphisms(g).group.order() == brute_aut_count(g)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 12), st.integers(0, 2**32 - 1))
def test_canonical_form_invariant(n, seed):
    g = _random_graph(n, seed)
    rng = np.random.default_rng(seed + 1)
    perm = rng.permutation(n)
    h = g.relabel(perm)
    ra, rb = automorphisms(g), automorphisms(h)
    assert ra.canonical_form == rb.canonical_form
    iso = find_isomorphism(g, h)
    assert g.relabel(iso) == h


def test_canonical_form_separates():
    a = ColoredDigraph(3, frozenset({(0, 1), (1, 2), (2, 0)}), (0, 0, 0))
    b = ColoredDigraph(3, frozenset({(0, 1), (1, 0), (2, 0)}), (0, 0, 0))
    assert automorphisms(a).canonical_form != automorphisms(b).canonical_form
    assert find_isomorphism(a, b) is None


def test_canonical_invariance_strong_graph_100(s16):
    g = strong_graph(s16)
    ref = automorphisms(g).canonical_form
    rng = np.random.default_rng(3)
    for _ in range(100):
        assert automorphisms(g.relabel(rng.permutation(g.n)), canonical=True).canonical_form == ref
