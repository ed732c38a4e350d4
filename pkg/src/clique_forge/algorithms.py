"""Name-based access to every enumerator and input source.

Used by the CLI and the benchmark harness so both resolve ``--algo`` names
and input descriptors the same way.
"""

from __future__ import annotations

from pathlib import Path

from .boundary import enumerate_boundary_fixed, enumerate_boundary_recursive, enumerate_triangles
from .classic import (StaticAdjacency, degree_order, triangles_edge_iterator, triangles_forward,
                      triangles_k3)
from .filtration import (EdgeStream, OrderPolicy, build_vr_edges, complete_graph,
                         load_edge_stream, read_csv_edges, read_pcd, reorder)
from .multilayer import enumerate_multilayer_fixed, enumerate_multilayer_recursive
from .sinks import RunSummary

ALIASES = {"boundary": "boundary-recursive", "multilayer": "multilayer-recursive"}

ALGORITHMS = (
    "boundary-recursive",
    "boundary-fixed",
    "multilayer-recursive",
    "multilayer-fixed",
    "triangles",
    "edge-iter",
    "k3",
    "forward",
)

# Highest dimension each algorithm can report regardless of d_max.
TRIANGLE_ONLY = {"triangles", "edge-iter", "k3", "forward"}


def canonical_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")
    return name


def default_order(name: str) -> OrderPolicy:
    name = canonical_name(name)
    if name.startswith("multilayer"):
        return OrderPolicy.LEXICOGRAPHIC
    return OrderPolicy.BY_WEIGHT_THEN_LEX


def run_algorithm(name: str, stream: EdgeStream, d_max: int, sink,
                  order: OrderPolicy | str | None = None, backend: str | None = None
                  ) -> RunSummary:
    """Order ``stream`` as requested and run the named enumerator into ``sink``."""
    name = canonical_name(name)
    order = default_order(name) if order is None else OrderPolicy.parse(order)
    if order is not OrderPolicy.AS_GIVEN and stream.order is not order:
        stream = reorder(stream, order)
    if name == "boundary-recursive":
        return enumerate_boundary_recursive(stream, d_max, sink, backend=backend)
    if name == "boundary-fixed":
        return enumerate_boundary_fixed(stream, d_max, sink)
    if name.startswith("multilayer"):
        opts = {"order": order, "allow_any_order": order is not OrderPolicy.LEXICOGRAPHIC}
        if name == "multilayer-fixed":
            return enumerate_multilayer_fixed(stream, d_max, sink, **opts)
        return enumerate_multilayer_recursive(stream, d_max, sink, backend=backend, **opts)
    if name == "triangles":
        return enumerate_triangles(stream, sink)
    adj = StaticAdjacency.from_edges(stream)
    if name == "edge-iter":
        return triangles_edge_iterator(stream, adj, sink)
    nodes = degree_order(adj)
    if name == "k3":
        return triangles_k3(nodes, adj, sink, edges=stream)
    return triangles_forward(nodes, adj, sink, edges=stream)


def load_input(desc: dict) -> EdgeStream:
    """Build an edge stream from an input descriptor.

    Descriptors: ``{"kind": "complete", "n": 30, "seed": 0}``,
    ``{"kind": "csv", "path": ...}`` (two-column edge list),
    ``{"kind": "edges", "path": ...}`` (``u,v,weight`` stream) and
    ``{"kind": "pcd", "path": ..., "epsilon": 0.05}``.
    """
    kind = desc.get("kind")
    if kind == "complete":
        return complete_graph(int(desc["n"]), int(desc.get("seed", 0)))
    if kind == "csv":
        return read_csv_edges(desc["path"], desc.get("has_header"))
    if kind == "edges":
        return load_edge_stream(Path(desc["path"]).read_bytes())
    if kind == "pcd":
        return build_vr_edges(read_pcd(desc["path"]), float(desc["epsilon"]))
    raise ValueError(f"unknown input kind {kind!r}")


def describe_input(desc: dict) -> str:
    kind = desc.get("kind")
    if kind == "complete":
        return f"complete:n={desc['n']}"
    if kind == "pcd":
        return f"pcd:{Path(desc['path']).name}:eps={desc['epsilon']}"
    return f"{kind}:{Path(desc.get('path', '?')).name}"
