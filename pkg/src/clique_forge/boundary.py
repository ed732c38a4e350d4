"""Evolving boundary-neighbourhood enumerators.

Every discovered clique registers itself with each of its codimension-1 faces
(face -> nodes completing it). The nodes shared by all faces of a clique are
exactly its one-node extensions whose other faces are already known, so each
larger clique is produced once, when its last face appears. This makes the
family independent of edge order.
"""

from __future__ import annotations

from ._backend import WeightOf, as_stream, run_recursive
from .core import Clique
from .errors import DuplicateEdge
from .sinks import RunSummary

__all__ = ["enumerate_triangles", "enumerate_boundary_fixed", "enumerate_boundary_recursive"]


def _emitter(stream, sink):
    weight_of = WeightOf(stream)
    accept = sink.accept
    seq = 0

    def emit(nodes, idx):
        nonlocal seq
        accept(Clique._trusted(nodes), weight_of(nodes, idx), seq)
        seq += 1

    return emit


def _add_edge(adj, x, y, idx):
    ax = adj.setdefault(x, set())
    if y in ax:
        raise DuplicateEdge(x, y, idx)
    ax.add(y)
    adj.setdefault(y, set()).add(x)


def enumerate_triangles(stream, sink) -> RunSummary:
    """Edges and triangles, growing node neighbourhoods one edge at a time."""
    stream = as_stream(stream)
    emit = _emitter(stream, sink)
    adj: dict[int, set] = {}
    counts = {1: 0, 2: 0}
    for idx, (x, y) in enumerate(stream.pairs()):
        _add_edge(adj, x, y, idx)
        emit((x, y), idx)
        counts[1] += 1
        for z in sorted(adj[x] & adj[y]):
            emit(tuple(sorted((x, y, z))), idx)
            counts[2] += 1
    counts = {d: c for d, c in counts.items() if c}
    return RunSummary("triangles", 2, counts, sum(counts.values()),
                      state_entries=2 * len(stream))


def _register(faces_map, clique):
    """Record ``clique`` under each of its faces; return its extensions."""
    sets = []
    for i in range(len(clique)):
        face = clique[:i] + clique[i + 1:]
        s = faces_map.get(face)
        if s is None:
            s = faces_map[face] = set()
        s.add(clique[i])
        sets.append(s)
    sets.sort(key=len)
    return sorted(sets[0].intersection(*sets[1:]))


def enumerate_boundary_fixed(stream, d_max: int, sink) -> RunSummary:
    """Unrolled boundary enumerator for ``d_max`` of 3, 4 or 5.

    One explicit loop level per dimension: triangles extend to tetrahedra,
    then (if requested) pentahedra and hexahedra. For any other ``d_max`` use
    :func:`enumerate_boundary_recursive`.
    """
    if d_max not in (3, 4, 5):
        raise ValueError(f"fixed-depth enumerator supports d_max 3, 4 or 5, not {d_max}; "
                         "use enumerate_boundary_recursive")
    stream = as_stream(stream)
    emit = _emitter(stream, sink)
    adj: dict[int, set] = {}
    pi3: dict[tuple, set] = {}  # edge -> apexes of known triangles
    pi4: dict[tuple, set] = {}  # triangle -> apexes of known tetrahedra
    pi5: dict[tuple, set] = {}  # tetrahedron -> apexes of known pentahedra
    counts = dict.fromkeys(range(1, d_max + 1), 0)
    for idx, (x, y) in enumerate(stream.pairs()):
        _add_edge(adj, x, y, idx)
        emit((x, y), idx)
        counts[1] += 1
        for z in sorted(adj[x] & adj[y]):
            tri = tuple(sorted((x, y, z)))
            emit(tri, idx)
            counts[2] += 1
            for w in _register(pi3, tri):
                tet = tuple(sorted(tri + (w,)))
                emit(tet, idx)
                counts[3] += 1
                if d_max < 4:
                    continue
                for q in _register(pi4, tet):
                    pen = tuple(sorted(tet + (q,)))
                    emit(pen, idx)
                    counts[4] += 1
                    if d_max < 5:
                        continue
                    for r in _register(pi5, pen):
                        emit(tuple(sorted(pen + (r,))), idx)
                        counts[5] += 1
    entries = sum(len(s) for m in (adj, pi3, pi4, pi5) for s in m.values())
    counts = {d: c for d, c in counts.items() if c}
    return RunSummary("boundary-fixed", d_max, counts, sum(counts.values()),
                      state_entries=entries, state_keys=len(pi3) + len(pi4) + len(pi5))


def enumerate_boundary_recursive(stream, d_max: int, sink, *, backend: str | None = None
                                 ) -> RunSummary:
    """Boundary enumerator for any ``d_max >= 2``.

    Walks each new edge's extension tree depth-first. ``backend`` picks the
    compiled core or the pure-Python kernel (default: compiled if built).
    """
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    return run_recursive("boundary", stream, d_max, sink, backend, "boundary-recursive")
