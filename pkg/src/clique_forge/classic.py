"""Classic triangle-listing baselines on a static adjacency."""

from __future__ import annotations

from ._backend import WeightOf, as_stream
from .core import Clique
from .errors import InconsistentInput, InvalidOrder
from .sinks import RunSummary

__all__ = ["StaticAdjacency", "degree_order", "triangles_edge_iterator", "triangles_k3",
           "triangles_forward"]


class StaticAdjacency(dict):
    """Symmetric node -> neighbour-set map of a whole graph."""

    @classmethod
    def from_edges(cls, edges) -> "StaticAdjacency":
        adj = cls()
        for e in as_stream(edges):
            adj.setdefault(e.u, set()).add(e.v)
            adj.setdefault(e.v, set()).add(e.u)
        return adj

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.values()) // 2

    def degree(self, node) -> int:
        return len(self.get(node, ()))


def degree_order(adj: StaticAdjacency) -> list[int]:
    """Nodes by degree, largest first; ties by ascending id."""
    return sorted(adj, key=lambda n: (-len(adj[n]), n))


def _check_order(nodes, adj):
    if sorted(nodes) != sorted(adj):
        raise InconsistentInput("node sequence does not list exactly the graph's nodes")
    degs = [len(adj[n]) for n in nodes]
    for i in range(len(nodes) - 1):
        if degs[i] < degs[i + 1] or (degs[i] == degs[i + 1] and nodes[i] > nodes[i + 1]):
            raise InvalidOrder(f"nodes not in descending degree order at position {i}")


def _weights_for(adj, edges=None):
    if edges is None:
        return lambda nodes: 0.0
    weight_of = WeightOf(as_stream(edges))
    if weight_of.mode == "zero":
        return lambda nodes: 0.0
    table = {(e.u, e.v): e.weight for e in as_stream(edges)}
    return lambda nodes: max(table[(nodes[0], nodes[1])], table[(nodes[0], nodes[2])],
                             table[(nodes[1], nodes[2])])


def triangles_edge_iterator(edges, adj: StaticAdjacency, sink) -> RunSummary:
    """For every edge, report each common neighbour of its ends.

    Each triangle is reported once per edge, i.e. three times in total; the
    summary carries both the raw and the distinct count.
    """
    stream = as_stream(edges)
    if adj.n_edges != len(stream) or any(e.v not in adj.get(e.u, ()) for e in stream):
        raise InconsistentInput("adjacency was not built from this edge stream")
    weight = _weights_for(adj, stream)
    raw = 0
    for x, y in stream.pairs():
        for z in sorted(adj[x] & adj[y]):
            tri = tuple(sorted((x, y, z)))
            sink.accept(Clique._trusted(tri), weight(tri), raw)
            raw += 1
    return RunSummary("edge-iter", 2, {2: raw // 3} if raw else {}, raw,
                      extra={"raw": raw, "distinct": raw // 3})


def triangles_k3(nodes, adj: StaticAdjacency, sink, edges=None) -> RunSummary:
    """Chiba-Nishizeki marking scheme over nodes in descending-degree order.

    Each outer step marks the neighbours of ``v``; a marked ``u`` reports every
    marked neighbour ``w`` and is then unmarked, and ``v`` leaves the graph.
    """
    nodes = list(nodes)
    _check_order(nodes, adj)
    weight = _weights_for(adj, edges)
    live = {n: set(s) for n, s in adj.items()}
    seq = 0
    for v in nodes[:-2] if len(nodes) > 2 else []:
        marked = set(live[v])
        for u in sorted(live[v]):
            for w in sorted(live[u]):
                if w in marked:
                    tri = tuple(sorted((v, u, w)))
                    sink.accept(Clique._trusted(tri), weight(tri), seq)
                    seq += 1
            marked.discard(u)
        for u in live.pop(v):
            live[u].discard(v)
    return RunSummary("k3", 2, {2: seq} if seq else {}, seq)


def triangles_forward(nodes, adj: StaticAdjacency, sink, edges=None) -> RunSummary:
    """Forward method: each node collects its already-visited neighbours in ``A``.

    A triangle is reported when an edge ``(y, z)`` with ``y`` ranked before
    ``z`` finds a common entry in ``A(y)`` and ``A(z)``.
    """
    nodes = list(nodes)
    _check_order(nodes, adj)
    weight = _weights_for(adj, edges)
    rank = {n: i for i, n in enumerate(nodes)}
    seen: dict[int, set] = {n: set() for n in nodes}
    seq = 0
    for y in nodes:
        ry = rank[y]
        for z in sorted(adj[y], key=rank.__getitem__):
            if ry < rank[z]:
                for x in sorted(seen[y] & seen[z], key=rank.__getitem__):
                    tri = tuple(sorted((x, y, z)))
                    sink.accept(Clique._trusted(tri), weight(tri), seq)
                    seq += 1
                seen[z].add(y)
    a_total = sum(len(s) for s in seen.values())
    return RunSummary("forward", 2, {2: seq} if seq else {}, seq, state_entries=a_total)
