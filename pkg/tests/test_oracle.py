import itertools

import pytest
from hypothesis import given, strategies as st

from clique_forge import OracleTooLarge, boundary_faces, brute_force_cliques, per_dim_census

from conftest import FIG2_EDGES

K5 = list(itertools.combinations(range(5), 2))


def test_fig2():
    got = brute_force_cliques(FIG2_EDGES, 3)
    assert len(got) == 14
    assert per_dim_census(got) == {1: 8, 2: 5, 3: 1}
    assert (1, 2, 3, 5) in got


def test_k5():
    assert per_dim_census(brute_force_cliques(K5, 4)) == {1: 10, 2: 10, 3: 5, 4: 1}


def test_edgeless():
    assert brute_force_cliques([], 4) == set()


def test_census_examples():
    assert per_dim_census(set()) == {}
    k4 = brute_force_cliques(itertools.combinations(range(4), 2), 3)
    assert per_dim_census(k4) == {1: 6, 2: 4, 3: 1}


def test_cap():
    star = [(0, i) for i in range(1, 45)]
    with pytest.raises(OracleTooLarge):
        brute_force_cliques(star, 3)
    assert len(brute_force_cliques(star, 3, cap=50)) == 44


graphs = st.sets(st.tuples(st.integers(0, 11), st.integers(0, 11)).filter(lambda t: t[0] < t[1]),
                 max_size=50)


@given(graphs, st.integers(1, 6))
def test_downward_closure(edges, d_max):
    out = brute_force_cliques(edges, d_max)
    for c in out:
        if c.dim > 1:
            assert boundary_faces(c) <= out
        else:
            assert c in edges


@given(graphs, graphs, st.integers(1, 5))
def test_monotone(a, b, d_max):
    assert brute_force_cliques(a, d_max) <= brute_force_cliques(a, d_max + 1)
    assert brute_force_cliques(a, d_max) <= brute_force_cliques(a | b, d_max)


@given(graphs, st.integers(1, 5))
def test_matches_subset_definition(edges, d_max):
    nodes = sorted({n for e in edges for n in e})
    want = {c for k in range(2, d_max + 2) for c in itertools.combinations(nodes, k)
            if all(p in edges for p in itertools.combinations(c, 2))}
    assert brute_force_cliques(edges, d_max) == want
