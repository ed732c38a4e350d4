import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clique_forge import (DuplicateEdge, EdgeStream, MalformedInput, OrderPolicy, PointCloud,
                          UnsupportedFormat, build_vr_edges, complete_graph, dump_edge_stream,
                          load_edge_stream, parse_csv_edges, parse_pcd_ascii, reorder)
from clique_forge.filtration import write_pcd_ascii

PCD_HEAD = "VERSION 0.7\nFIELDS x y z\nSIZE 4 4 4\nTYPE F F F\nCOUNT 1 1 1\n"


def test_pcd_two_points():
    pc = parse_pcd_ascii(PCD_HEAD + "POINTS 2\nDATA ascii\n0 0 0\n1 0 0\n")
    assert len(pc) == 2
    assert pc.points.tolist() == [[0, 0, 0], [1, 0, 0]]


def test_pcd_count_mismatch():
    with pytest.raises(MalformedInput):
        parse_pcd_ascii(PCD_HEAD + "POINTS 3\nDATA ascii\n0 0 0\n1 0 0\n")


def test_pcd_binary_unsupported():
    with pytest.raises(UnsupportedFormat):
        parse_pcd_ascii(PCD_HEAD + "POINTS 1\nDATA binary\n\x00\x01")


def test_pcd_extra_fields_take_first_three():
    text = "FIELDS x y z rgb\nPOINTS 1\nDATA ascii\n1.5 2 3 4.2e6\n"
    assert parse_pcd_ascii(text.encode()).points.tolist() == [[1.5, 2, 3]]


def test_pcd_bad_value_reports_line():
    with pytest.raises(MalformedInput) as err:
        parse_pcd_ascii("FIELDS x y z\nPOINTS 1\nDATA ascii\n1 two 3\n")
    assert err.value.line == 4


def test_csv_with_header():
    s = parse_csv_edges("node_1,node_2\n0,1\n1,2")
    assert s.pairs() == [(0, 1), (1, 2)]
    assert s.order is OrderPolicy.AS_GIVEN
    assert not s.weight.any()


def test_csv_drops_self_loop():
    s = parse_csv_edges("3,3\n1,2\n")
    assert s.pairs() == [(1, 2)]
    assert s.self_loops_dropped == 1


def test_csv_drops_duplicate():
    s = parse_csv_edges("2,1\n1,2\n")
    assert s.pairs() == [(1, 2)]
    assert s.duplicates_dropped == 1


def test_csv_non_integer_reports_line():
    with pytest.raises(MalformedInput) as err:
        parse_csv_edges("node_1,node_2\n0,1\n1,x\n")
    assert err.value.line == 3


def test_csv_explicit_header_flag():
    assert parse_csv_edges("5,6\n1,2\n", has_header=True).pairs() == [(1, 2)]
    assert parse_csv_edges("5,6\n1,2\n", has_header=False).pairs() == [(5, 6), (1, 2)]


def test_vr_right_triangle():
    s = build_vr_edges([(0, 0), (1, 0), (0, 1)], 0.6)
    assert s.pairs() == [(0, 1), (0, 2)]
    assert s.weight.tolist() == [1.0, 1.0]
    assert s.order is OrderPolicy.BY_WEIGHT_THEN_LEX


def test_vr_zero_epsilon_keeps_coincident_only():
    s = build_vr_edges([(0, 0), (0, 0), (1, 1), (2, 2), (1, 1)], 0.0)
    assert s.pairs() == [(0, 1), (2, 4)]
    assert not s.weight.any()


def test_vr_unit_square_is_k4():
    s = build_vr_edges([(0, 0), (1, 0), (0, 1), (1, 1)], 0.75)
    assert len(s) == 6
    assert s.pairs()[:4] == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_vr_mixed_dimensions():
    with pytest.raises(MalformedInput):
        build_vr_edges([(0, 0), (1, 0, 0)], 1.0)


def test_vr_negative_epsilon():
    with pytest.raises(ValueError):
        build_vr_edges([(0, 0), (1, 0)], -0.1)


@pytest.mark.parametrize("n,m", [(3, 3), (30, 435), (1, 0)])
def test_complete_graph_sizes(n, m):
    s = complete_graph(n)
    assert len(s) == m
    assert ((s.weight > 0) & (s.weight <= 1)).all()
    assert (np.diff(s.weight) >= 0).all()


def test_complete_graph_seeded():
    assert complete_graph(12, seed=4) == complete_graph(12, seed=4)
    assert complete_graph(12, seed=4) != complete_graph(12, seed=5)


def test_reorder_examples():
    s = EdgeStream.from_edges([(1, 2, 0.9), (0, 3, 0.1)])
    assert reorder(s, "weight").pairs() == [(0, 3), (1, 2)]
    assert reorder(s, "lex").pairs() == [(0, 3), (1, 2)]
    tie = EdgeStream.from_edges([(0, 2, 0.5), (0, 1, 0.5)])
    assert reorder(tie, OrderPolicy.BY_WEIGHT_THEN_LEX).pairs() == [(0, 1), (0, 2)]
    assert reorder(tie, "asgiven").pairs() == [(0, 2), (0, 1)]


def test_stream_rejects_duplicates_and_loops():
    with pytest.raises(DuplicateEdge):
        EdgeStream.from_edges([(0, 1), (1, 0)])
    with pytest.raises(MalformedInput):
        EdgeStream.from_edges([(2, 2)])


def test_stream_canonicalises():
    s = EdgeStream.from_edges([(5, 1, 0.2)])
    assert list(s) == [(1, 5, 0.2)]


weighted_edges = st.dictionaries(
    st.tuples(st.integers(0, 40), st.integers(0, 40)).filter(lambda t: t[0] < t[1]),
    st.floats(0, 1e6, allow_nan=False), max_size=60)


@given(weighted_edges, st.sampled_from(list(OrderPolicy)))
def test_reorder_preserves_multiset(edges, policy):
    s = EdgeStream.from_edges([(a, b, w) for (a, b), w in edges.items()])
    r = reorder(s, policy)
    assert sorted(r) == sorted(s)
    if policy is OrderPolicy.BY_WEIGHT_THEN_LEX:
        keys = [(e.weight, e.u, e.v) for e in r]
        assert keys == sorted(keys)
    if policy is OrderPolicy.LEXICOGRAPHIC:
        assert r.pairs() == sorted(r.pairs())


@given(weighted_edges)
def test_edge_stream_round_trip(edges):
    s = EdgeStream.from_edges([(a, b, w) for (a, b), w in edges.items()])
    text = dump_edge_stream(s)
    back = load_edge_stream(text)
    assert back == s
    assert dump_edge_stream(back) == text


@given(st.sets(st.tuples(st.integers(0, 30), st.integers(0, 30)).filter(lambda t: t[0] != t[1]),
               max_size=40))
def test_csv_round_trip(pairs):
    s = parse_csv_edges("\n".join(f"{a},{b}" for a, b in pairs))
    text = "node_1,node_2\n" + "\n".join(f"{a},{b}" for a, b in s.pairs())
    assert parse_csv_edges(text) == s


coords = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


@given(st.integers(1, 3).flatmap(
    lambda m: st.lists(st.lists(coords, min_size=m, max_size=m), max_size=20)))
def test_pcd_round_trip(points):
    if not points:
        return
    pc = PointCloud.from_points(points)
    again = parse_pcd_ascii(write_pcd_ascii(pc))
    assert np.array_equal(again.points, pc.points)


# millimetre resolution: squared subnormal differences would underflow in any
# sum-of-squares distance, which is not what this property is about
grid = st.integers(-10**6, 10**6).map(lambda k: k / 1000)


@settings(max_examples=50)
@given(st.lists(st.tuples(grid, grid), min_size=2, max_size=25),
       st.floats(0, 500), st.floats(0, 500))
def test_vr_predicate_and_nesting(points, e1, e2):
    lo, hi = sorted((e1, e2))
    small = set(build_vr_edges(points, lo).pairs())
    large = set(build_vr_edges(points, hi).pairs())
    assert small <= large
    want = {(i, j) for i in range(len(points)) for j in range(i + 1, len(points))
            if math.dist(points[i], points[j]) <= 2 * hi}
    # pdist and math.dist may round differently only at the exact cutoff
    for i, j in want ^ large:
        assert math.isclose(math.dist(points[i], points[j]), 2 * hi, rel_tol=1e-12)
