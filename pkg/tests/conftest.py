import random

import pytest

from clique_forge import _backend

# Fig. 2 example graph in the edge order of the worked boundary example.
FIG2_EDGES = [(1, 2), (2, 3), (1, 5), (2, 5), (3, 5), (1, 3), (3, 4), (4, 5)]
# Same graph, edge order used by the worked multilayer example.
FIG2_MULTILAYER_ORDER = [(1, 2), (1, 5), (1, 3), (2, 3), (2, 5), (3, 5), (3, 4), (4, 5)]
# Clique column of the worked boundary example, one row per discovery.
TABLE1_ORDER = [(1, 2), (2, 3), (1, 5), (2, 5), (1, 2, 5), (3, 5), (2, 3, 5), (1, 3),
                (1, 2, 3), (1, 3, 5), (1, 2, 3, 5), (3, 4), (4, 5), (3, 4, 5)]
# Clique column of the worked multilayer example.
TABLE3_ORDER = [(1, 2), (1, 5), (1, 3), (2, 3), (1, 2, 3), (2, 5), (1, 2, 5), (3, 5),
                (1, 3, 5), (2, 3, 5), (1, 2, 3, 5), (3, 4), (4, 5), (3, 4, 5)]


def er_graph(seed, n_range=(4, 30), p_range=(0.1, 0.9)):
    """Seeded Erdos-Renyi graph with random weights: (n, p, edges)."""
    rng = random.Random(seed)
    n = rng.randint(*n_range)
    p = rng.uniform(*p_range)
    edges = [(i, j, rng.random()) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return n, p, edges


@pytest.fixture(params=_backend.BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def fig2():
    return list(FIG2_EDGES)


def pytest_terminal_summary(terminalreporter):
    lines = getattr(terminalreporter.config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
