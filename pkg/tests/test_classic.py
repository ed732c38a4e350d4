import itertools
import random

import pytest

from clique_forge import (CollectingSink, EdgeStream, InconsistentInput, InvalidOrder,
                          StaticAdjacency, brute_force_cliques, degree_order,
                          triangles_edge_iterator, triangles_forward, triangles_k3)

from conftest import FIG2_EDGES, er_graph

K3 = [(0, 1), (0, 2), (1, 2)]
K4 = list(itertools.combinations(range(4), 2))
PATH = [(1, 2), (2, 3)]
K23 = [(a, b) for a in (0, 1) for b in (2, 3, 4)]


def oracle_triangles(edges):
    return {c for c in brute_force_cliques(edges, 2) if len(c) == 3}


def edge_iter(edges):
    s = EdgeStream.from_edges(edges)
    sink = CollectingSink()
    summary = triangles_edge_iterator(s, StaticAdjacency.from_edges(s), sink)
    return sink, summary


def ordered(fn, edges):
    adj = StaticAdjacency.from_edges(edges)
    sink = CollectingSink()
    summary = fn(degree_order(adj), adj, sink, edges=edges)
    return sink, summary


@pytest.mark.parametrize("edges,raw,distinct", [(K3, 3, 1), (PATH, 0, 0), (K4, 12, 4)])
def test_edge_iterator_counts(edges, raw, distinct):
    sink, summary = edge_iter(edges)
    assert len(sink) == raw
    assert summary.extra == {"raw": raw, "distinct": distinct}
    assert len(set(sink.cliques)) == distinct


def test_edge_iterator_inconsistent_adjacency():
    adj = StaticAdjacency.from_edges(K4)
    with pytest.raises(InconsistentInput):
        triangles_edge_iterator(EdgeStream.from_edges(K3), adj, CollectingSink())


@pytest.mark.parametrize("fn", [triangles_k3, triangles_forward])
@pytest.mark.parametrize("edges,count", [(K4, 4), (K23, 0), ([], 0)])
def test_ordered_methods(fn, edges, count):
    sink, summary = ordered(fn, edges)
    assert len(sink) == count == summary.counts.get(2, 0)
    assert len(set(sink.cliques)) == count


@pytest.mark.parametrize("fn", [triangles_k3, triangles_forward])
def test_fig2_triangles(fn):
    sink, _ = ordered(fn, FIG2_EDGES)
    assert set(sink.cliques) == {(1, 2, 5), (2, 3, 5), (1, 2, 3), (1, 3, 5), (3, 4, 5)}
    assert len(sink) == 5


def test_forward_er_20():
    rng = random.Random(20)
    edges = [(i, j) for i in range(20) for j in range(i + 1, 20) if rng.random() < 0.4]
    sink, _ = ordered(triangles_forward, edges)
    assert set(sink.cliques) == oracle_triangles(edges)
    assert len(sink) == len(oracle_triangles(edges))


@pytest.mark.parametrize("fn", [triangles_k3, triangles_forward])
def test_unsorted_input_rejected(fn):
    adj = StaticAdjacency.from_edges(FIG2_EDGES)
    nodes = degree_order(adj)
    with pytest.raises(InvalidOrder):
        fn(list(reversed(nodes)), adj, CollectingSink())
    with pytest.raises(InconsistentInput):
        fn(nodes[:-1], adj, CollectingSink())


def test_degree_order_ties_by_id():
    adj = StaticAdjacency.from_edges(FIG2_EDGES)
    assert degree_order(adj) == [3, 5, 1, 2, 4]


@pytest.mark.parametrize("seed", range(40))
def test_baselines_match_oracle(seed):
    _, _, edges = er_graph(5000 + seed)
    pairs = [(a, b) for a, b, _ in edges]
    want = oracle_triangles(pairs)
    sink, summary = edge_iter(edges)
    assert set(sink.cliques) == want and len(sink) == 3 * len(want)
    for fn in (triangles_k3, triangles_forward):
        sink, summary = ordered(fn, edges)
        assert set(sink.cliques) == want and len(sink) == len(want)
        if fn is triangles_forward:
            assert summary.state_entries <= len(edges)


def test_weights_are_max_edge_weight():
    edges = [(0, 1, 0.3), (0, 2, 0.7), (1, 2, 0.2)]
    for fn in (triangles_k3, triangles_forward):
        sink, _ = ordered(fn, edges)
        assert [r[1] for r in sink.records] == [0.7]
    sink, _ = edge_iter(edges)
    assert {r[1] for r in sink.records} == {0.7}
