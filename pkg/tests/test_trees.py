import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from chowm0.trees import (NAMED_TREES, STRATUM_NAMES, ZERODIV_TREE, MultiplicityTooHigh, Tree,
                          TreeParseError, automorphism_group, canonical_encode, compose,
                          default_coordinatization, enumerate_trees, inverse, multiplicity_data,
                          parse_tree, preserves_infinity)


def chain(n):
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def test_enumerate_three_edges():
    trees = enumerate_trees(3, 3)
    assert len(trees) == 5
    codes = {canonical_encode(t) for t in trees}
    assert codes == {canonical_encode(NAMED_TREES[k]) for k in STRATUM_NAMES}


def test_enumerate_zero_edges():
    assert [t.n_vertices for t in enumerate_trees(0, 3)] == [1]


def test_enumerate_counts_against_networkx():
    trees = enumerate_trees(5)
    by_size = [sum(1 for t in trees if t.n_vertices == n) for n in range(1, 7)]
    assert by_size == [1, 1, 1, 2, 3, 6]
    oracle = [sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else 1 for n in range(1, 8)]
    assert [sum(1 for t in enumerate_trees(6) if t.n_vertices == n) for n in range(1, 8)] == oracle


def test_enumerate_respects_multiplicity_cap():
    for cap in (1, 2, 3):
        for t in enumerate_trees(5, cap):
            assert t.max_multiplicity <= cap
    # paths only when capped at 2
    assert len(enumerate_trees(5, 2)) == 6


def test_enumerated_trees_are_trees():
    for t in enumerate_trees(6):
        md = multiplicity_data(t)
        assert t.n_edges == t.n_vertices - 1
        assert sum(md.e) == 2 * t.n_edges
        assert sum(md.delta_counts.values()) == t.n_vertices


def test_encoding_examples():
    assert canonical_encode(NAMED_TREES["chain4"]) != canonical_encode(NAMED_TREES["star3"])
    a = Tree(3, ((0, 1), (1, 2)))
    b = Tree(3, ((2, 0), (0, 1)))
    assert canonical_encode(a) == canonical_encode(b)


def _random_tree(seed_edges):
    n = len(seed_edges) + 1
    return Tree(n, tuple((i + 1, p % (i + 1)) for i, p in enumerate(seed_edges)))


tree_strategy = st.lists(st.integers(0, 50), min_size=0, max_size=8).map(_random_tree)


@settings(max_examples=1000, deadline=None)
@given(tree_strategy, st.randoms(use_true_random=False))
def test_encoding_stable_under_relabeling(t, rnd):
    perm = list(range(t.n_vertices))
    rnd.shuffle(perm)
    assert canonical_encode(t.relabel(perm)) == canonical_encode(t)


def test_encoding_distinguishes_all_small_trees():
    trees = enumerate_trees(7)
    assert len({canonical_encode(t) for t in trees}) == len(trees)


def _brute_automorphisms(t):
    edges = set(t.edges)
    out = []
    for perm in itertools.permutations(range(t.n_vertices)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in t.edges):
            out.append(perm)
    return sorted(out)


def test_automorphism_orders():
    assert len(automorphism_group(NAMED_TREES["star3"])) == 6
    assert len(automorphism_group(NAMED_TREES["chain4"])) == 2
    assert len(automorphism_group(NAMED_TREES["pt"])) == 1
    assert automorphism_group(NAMED_TREES["chain3"])[0] == (0, 1, 2)


def test_automorphisms_exhaustive_small():
    for t in enumerate_trees(5):
        group = automorphism_group(t)
        assert sorted(group) == _brute_automorphisms(t)
        assert math.factorial(t.n_vertices) % len(group) == 0
        gs = set(group)
        for g in group:
            assert inverse(g) in gs
            for h in group:
                assert compose(g, h) in gs


def test_default_coordinatization():
    assert default_coordinatization(chain(3)) == ((1, 2),)
    assert default_coordinatization(chain(4)) == ((1, 2), (2, 1))
    assert default_coordinatization(chain(2)) == ()
    with pytest.raises(MultiplicityTooHigh):
        default_coordinatization(Tree(5, ((0, 1), (0, 2), (0, 3), (0, 4))))


def test_named_trees_carry_orientation():
    assert NAMED_TREES["chain3"].infinity_edge(1) == (1, 2)
    assert NAMED_TREES["chain4"].infinity_edge(1) == (1, 2)
    assert NAMED_TREES["chain4"].infinity_edge(2) == (1, 2)
    assert NAMED_TREES["chain3"].infinity_edge(0) == (0, 1)
    assert NAMED_TREES["star3"].infinity_edge(3) is None


def test_flip_bit():
    c3 = NAMED_TREES["chain3"]
    tau = (2, 1, 0)
    assert not preserves_infinity(c3, tau, 1)
    c4 = NAMED_TREES["chain4"]
    tau4 = (3, 2, 1, 0)
    assert preserves_infinity(c4, tau4, 1) and preserves_infinity(c4, tau4, 2)
    assert c3.flipped(1).infinity_edge(1) == (0, 1)


def test_text_format_round_trip():
    for k in STRATUM_NAMES:
        t = NAMED_TREES[k]
        assert parse_tree(t.to_text()) == t
    assert parse_tree("zerodiv") == ZERODIV_TREE
    assert parse_tree("edges=0-1,1-2;inf=1:2") == NAMED_TREES["chain3"]


@pytest.mark.parametrize("text", ["edges=0-1,1-1", "edges=0-1;inf=0:1", "foo", "edges=0-1,0-1",
                                  "edges=0-1,2-3", "edges=0+1", "edges=0-1,1-2;inf=1:0,x"])
def test_bad_tree_text(text):
    with pytest.raises(TreeParseError):
        parse_tree(text)


def test_invalid_tree_construction():
    with pytest.raises(ValueError):
        Tree(3, ((0, 1),))
    with pytest.raises(ValueError):
        Tree(3, ((0, 1), (1, 2)), ((1, 5),))
