"""Value types and neighbourhood containers shared by every enumerator.

Dimension convention: a clique on ``k`` nodes has dimension ``k - 1``
(edge = 1, triangle = 2, tetrahedron = 3, ...).
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator, NamedTuple

from .errors import DegenerateClique, DuplicateEdge

__all__ = [
    "Clique",
    "FilteredEdge",
    "canonicalize",
    "boundary_faces",
    "intersect_all",
    "LayeredNeighborhood",
    "BoundaryNeighborhood",
]


class Clique(tuple):
    """Strictly ascending tuple of node ids.

    Being a tuple, a clique hashes and compares like its node sequence, so
    ``Clique((1, 2, 3)) == (1, 2, 3)``.
    """

    __slots__ = ()

    def __new__(cls, nodes: Iterable[int] = ()):
        nodes = tuple(nodes)
        for a, b in zip(nodes, nodes[1:]):
            if a >= b:
                if a == b:
                    raise DegenerateClique(f"repeated node {a} in {nodes}")
                raise ValueError(f"clique nodes must be ascending, got {nodes}")
        if nodes and nodes[0] < 0:
            raise ValueError("node ids must be non-negative")
        return tuple.__new__(cls, nodes)

    @classmethod
    def _trusted(cls, nodes) -> "Clique":
        # caller guarantees canonical form
        return tuple.__new__(cls, nodes)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


class FilteredEdge(NamedTuple):
    """Canonical edge ``u < v`` with its filtration value."""

    u: int
    v: int
    weight: float = 0.0

    @classmethod
    def make(cls, u: int, v: int, weight: float = 0.0) -> "FilteredEdge":
        if u == v:
            raise DegenerateClique(f"self-loop on node {u}")
        if u > v:
            u, v = v, u
        if u < 0:
            raise ValueError("node ids must be non-negative")
        if not weight >= 0:
            raise ValueError(f"edge weight must be >= 0, got {weight}")
        return cls(int(u), int(v), float(weight))


def canonicalize(nodes: Iterable[int]) -> Clique:
    """Sort ``nodes`` into a clique, rejecting duplicates and empty input."""
    ordered = sorted(nodes)
    if not ordered:
        raise DegenerateClique("a clique needs at least one node")
    return Clique(ordered)


def boundary_faces(c: Clique) -> set[Clique]:
    """Codimension-1 faces of ``c``; a single node has none."""
    if len(c) < 2:
        return set()
    return {Clique._trusted(c[:i] + c[i + 1:]) for i in range(len(c))}


def intersect_all(sets) -> set:
    """Intersection of several sets, iterating the smallest and probing the rest."""
    sets = sorted(sets, key=len)
    if not sets:
        return set()
    out = set(sets[0])
    for other in sets[1:]:
        if not out:
            break
        out.intersection_update(other)
    return out


def insert_node(clique: tuple, z: int) -> tuple:
    """Return ``clique`` with ``z`` inserted at its sorted position."""
    i = bisect_left(clique, z)
    return clique[:i] + (z,) + clique[i:]


class LayeredNeighborhood:
    """Per-dimension node neighbourhoods for the multilayer enumerators.

    ``layer(k)`` maps a node to the set gating extensions of ``k``-node
    cliques that contain it; ``layer(2)`` is the ordinary adjacency.
    """

    def __init__(self, top: int):
        self.layers: dict[int, dict[int, set]] = {k: {} for k in range(2, top + 1)}
        self.entries = 0

    def layer(self, k: int) -> dict[int, set]:
        return self.layers[k]

    def get(self, k: int, node: int) -> set:
        return self.layers[k].get(node, _EMPTY)

    def add(self, k: int, node: int, other: int) -> bool:
        s = self.layers[k].setdefault(node, set())
        if other in s:
            return False
        s.add(other)
        self.entries += 1
        return True

    def add_edge(self, x: int, y: int, index=None) -> None:
        if not self.add(2, x, y):
            raise DuplicateEdge(x, y, index)
        self.add(2, y, x)

    def __contains__(self, k) -> bool:
        return k in self.layers

    def __iter__(self) -> Iterator[int]:
        return iter(self.layers)

    @property
    def keys(self) -> int:
        return sum(1 for layer in self.layers.values() for s in layer.values() if s)


class BoundaryNeighborhood:
    """Map from a canonical face to the nodes that complete it into a clique.

    Faces of a single node act as the ordinary adjacency: ``get((x,))`` is
    the neighbourhood of ``x``.
    """

    def __init__(self):
        self.entries_by_face: dict[tuple, set] = {}
        self.entries = 0

    def get(self, face: tuple) -> set:
        return self.entries_by_face.get(face, _EMPTY)

    def add(self, face: tuple, node: int) -> bool:
        s = self.entries_by_face.get(face)
        if s is None:
            s = self.entries_by_face[face] = set()
        if node in s:
            return False
        s.add(node)
        self.entries += 1
        return True

    def add_edge(self, x: int, y: int, index=None) -> None:
        if not self.add((x,), y):
            raise DuplicateEdge(x, y, index)
        self.add((y,), x)

    def __len__(self) -> int:
        return len(self.entries_by_face)

    def __iter__(self):
        return iter(self.entries_by_face.items())


_EMPTY: frozenset = frozenset()
