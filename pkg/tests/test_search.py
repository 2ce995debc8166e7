import random

import pytest
from hypothesis import given, settings

from hzcolor.errors import TooLarge
from hzcolor.fixtures import complete, cycle, k5_minus_edge
from hzcolor.graph import Graph, edge_key
from hzcolor.search import enumerate_colorings, find_coloring, iter_colorings
from oracles import count_colorings, is_proper_edge_coloring, line_graph_colorable
from strategies import graphs


def test_two_edge_path_leaves_two_colorings():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert list(iter_colorings(g, 2, skip=(0, 1))) == [(0, 1), (0, 2)]


def test_c5_minus_edge_counts():
    assert enumerate_colorings(cycle(5), (0, 1), 2, lambda c: None) == 2
    # path on four edges: 3 * 2 * 2 * 2
    assert enumerate_colorings(cycle(5), (0, 1), 3, lambda c: None) == 24


def test_visitor_can_stop_early():
    seen = []
    n = enumerate_colorings(cycle(5), (0, 1), 3, lambda c: seen.append(c) or len(seen) < 5)
    assert n == 5


def test_bound_counts_only_free_edges():
    with pytest.raises(TooLarge):
        list(iter_colorings(complete(6), 5))
    g = complete(6)
    pinned = {e: i + 1 for i, e in enumerate([(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)])}
    assert next(iter_colorings(g, 5, fixed=pinned)) is not None


def test_fixed_and_forbid_are_respected():
    g = k5_minus_edge()
    fixed = {(2, 3): 1}
    for col in iter_colorings(g, 4, skip=(0, 2), fixed=fixed):
        assert col[g.edge_index[(2, 3)]] == 1


def test_find_coloring_examples():
    assert find_coloring(cycle(5), 2) is None
    col = find_coloring(cycle(5), 3, rng=random.Random(1))
    assert is_proper_edge_coloring(cycle(5).edge_list, col, 3)
    col = find_coloring(cycle(5), 2, skip=(0, 1))
    assert col[cycle(5).edge_index[(0, 1)]] == 0


@settings(max_examples=40)
@given(graphs(max_n=6, max_edges=7))
def test_enumeration_count_matches_brute_force(g):
    k = max(g.max_degree, 1)
    ours = list(iter_colorings(g, k))
    assert len(ours) == len(set(ours))
    assert all(is_proper_edge_coloring(g.edge_list, c, k) for c in ours)
    assert len(ours) == count_colorings(g.edge_list, k)


@settings(max_examples=30)
@given(graphs(max_n=6, min_edges=1, max_edges=7))
def test_enumeration_is_invariant_under_palette_permutation(g):
    k = g.max_degree
    cols = set(iter_colorings(g, k))
    perm = {c: k + 1 - c for c in range(1, k + 1)}
    assert {tuple(perm[c] for c in col) for col in cols} == cols


@given(graphs(max_n=8, max_edges=14))
def test_find_coloring_agrees_with_oracle(g):
    k = g.max_degree
    col = find_coloring(g, k)
    assert (col is not None) == line_graph_colorable(list(g.edge_list), k)
    if col is not None:
        assert is_proper_edge_coloring(g.edge_list, col, k)


@given(graphs(max_n=8, min_edges=1, max_edges=14))
def test_skip_edge_stays_uncolored(g):
    e = g.edge_list[0]
    col = find_coloring(g, g.max_degree + 1, skip=e)
    assert col is not None and col[g.edge_index[edge_key(*e)]] == 0
    assert is_proper_edge_coloring(g.edge_list, col, g.max_degree + 1, allow_zero=1)
