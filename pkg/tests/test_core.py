import itertools

import pytest
from hypothesis import given, strategies as st

from clique_forge import (BoundaryNeighborhood, Clique, DegenerateClique, DuplicateEdge,
                          FilteredEdge, LayeredNeighborhood, boundary_faces, canonicalize)
from clique_forge import _pykernels


def test_boundary_faces_triangle():
    assert boundary_faces(Clique((1, 2, 3))) == {(1, 2), (1, 3), (2, 3)}


def test_boundary_faces_edge():
    assert boundary_faces(Clique((4, 7))) == {(4,), (7,)}


def test_boundary_faces_tetrahedron():
    got = boundary_faces(Clique((1, 2, 3, 5)))
    assert got == {(1, 2, 3), (1, 2, 5), (1, 3, 5), (2, 3, 5)}
    assert all(isinstance(f, Clique) for f in got)


def test_boundary_faces_of_node_is_empty():
    assert boundary_faces(Clique((9,))) == set()


def test_canonicalize_sorts():
    assert canonicalize([3, 1, 2]) == Clique((1, 2, 3))


def test_canonicalize_singleton():
    c = canonicalize([5])
    assert c == (5,) and c.dim == 0


def test_canonicalize_rejects_duplicates():
    with pytest.raises(DegenerateClique):
        canonicalize([2, 2])


def test_canonicalize_rejects_empty():
    with pytest.raises(DegenerateClique):
        canonicalize([])


def test_clique_requires_ascending():
    with pytest.raises(ValueError):
        Clique((3, 1))
    with pytest.raises(DegenerateClique):
        Clique((1, 1))


def test_clique_dim_and_repr():
    c = Clique((1, 2, 3, 5))
    assert c.dim == 3
    assert c.nodes == (1, 2, 3, 5)
    assert repr(c) == "{1, 2, 3, 5}"


def test_filtered_edge_canonical():
    e = FilteredEdge.make(7, 2, 0.5)
    assert (e.u, e.v, e.weight) == (2, 7, 0.5)
    with pytest.raises(DegenerateClique):
        FilteredEdge.make(3, 3)
    with pytest.raises(ValueError):
        FilteredEdge.make(1, 2, -1.0)


node_sets = st.sets(st.integers(0, 10_000), min_size=1, max_size=8)


@given(node_sets, st.randoms())
def test_canonical_round_trip(nodes, rnd):
    c = canonicalize(nodes)
    perm = list(c)
    rnd.shuffle(perm)
    assert canonicalize(perm) == c


@given(st.sets(st.integers(0, 500), min_size=2, max_size=9))
def test_boundary_face_shape(nodes):
    c = canonicalize(nodes)
    faces = boundary_faces(c)
    assert len(faces) == c.dim + 1
    for f in faces:
        assert f.dim == c.dim - 1
        assert set(f) < set(c)
        assert list(f) == sorted(f)


@given(st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), max_size=60))
def test_layer_two_symmetric_after_every_edge(pairs):
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    state = LayeredNeighborhood(4)
    for x, y in edges:
        state.add_edge(x, y)
        adj = state.layer(2)
        for a, nbrs in adj.items():
            for b in nbrs:
                assert a in adj[b]


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40))
def test_layer_members_are_graph_neighbours(pairs):
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    res = _pykernels.multilayer_recursive([e[0] for e in edges], [e[1] for e in edges], 5)
    layers = res["state"].layers
    for k, layer in layers.items():
        for node, s in layer.items():
            assert s <= layers[2].get(node, set())


@given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)), max_size=40))
def test_boundary_entries_complete_cliques(pairs):
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    edge_set = set(edges)
    res = _pykernels.boundary_recursive([e[0] for e in edges], [e[1] for e in edges], 4)
    for face, nodes in res["state"]:
        assert list(face) == sorted(face)
        for z in nodes:
            members = sorted(set(face) | {z})
            assert len(members) == len(face) + 1
            assert all(p in edge_set for p in itertools.combinations(members, 2))


def test_neighbourhood_containers():
    b = BoundaryNeighborhood()
    b.add_edge(1, 2)
    assert b.get((1,)) == {2} and b.get((2,)) == {1}
    with pytest.raises(DuplicateEdge):
        b.add_edge(1, 2)
    assert b.add((1, 2), 3) and not b.add((1, 2), 3)
    assert b.entries == 3 and len(b) == 3

    layered = LayeredNeighborhood(3)
    layered.add_edge(0, 1)
    assert layered.get(2, 0) == {1} and layered.get(3, 0) == frozenset()
    assert 3 in layered and 4 not in layered
    assert layered.keys == 2
