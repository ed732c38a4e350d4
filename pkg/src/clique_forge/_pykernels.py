"""Pure-Python kernels for the recursive enumerators.

These mirror the compiled core one-for-one and are used when the extension is
not available (or when ``CLIQUE_FORGE_PURE=1``). Both walk the extension tree
depth-first with an explicit stack and visit extension nodes in ascending order,
so the discovery sequence is identical across backends.

Each kernel takes parallel node lists ``u``/``v`` and an optional
``emit(nodes, edge_index)`` callback and returns a dict with ``counts``
(indexed by dimension), ``state_entries`` and ``state_keys``.
"""

from __future__ import annotations

from bisect import bisect_left

from .core import BoundaryNeighborhood, LayeredNeighborhood
from .errors import DuplicateEdge, MalformedInput


def _edge(x, y, idx):
    if x == y:
        raise MalformedInput(f"self-loop on node {x} at stream position {idx}")
    return (x, y) if x < y else (y, x)


def boundary_recursive(u, v, d_max, emit=None):
    state = BoundaryNeighborhood()
    faces = state.entries_by_face
    counts = [0] * (d_max + 1)
    entries = 0
    for idx, (x, y) in enumerate(zip(u, v)):
        x, y = _edge(x, y, idx)
        fx = faces.get((x,))
        if fx is None:
            fx = faces[(x,)] = set()
        if y in fx:
            raise DuplicateEdge(x, y, idx)
        fy = faces.get((y,))
        if fy is None:
            fy = faces[(y,)] = set()
        fx.add(y)
        fy.add(x)
        entries += 2
        stack = [(x, y)]
        while stack:
            s = stack.pop()
            k = len(s)
            counts[k - 1] += 1
            if emit is not None:
                emit(s, idx)
            if k > d_max:
                continue
            if k == 2:
                a, b = faces[(s[0],)], faces[(s[1],)]
                zs = a & b
            else:
                sets = []
                for i in range(k):
                    face = s[:i] + s[i + 1:]
                    fs = faces.get(face)
                    if fs is None:
                        fs = faces[face] = set()
                    fs.add(s[i])
                    sets.append(fs)
                entries += k
                sets.sort(key=len)
                zs = sets[0].intersection(*sets[1:])
            if zs:
                for z in sorted(zs, reverse=True):
                    i = bisect_left(s, z)
                    stack.append(s[:i] + (z,) + s[i:])
    state.entries = entries
    return {"counts": counts, "state_entries": entries,
            "state_keys": sum(1 for f in faces if len(f) > 1), "state": state}


def multilayer_recursive(u, v, d_max, emit=None):
    state = LayeredNeighborhood(max(d_max, 2))
    layers = state.layers
    adj = layers[2]
    counts = [0] * (d_max + 1)
    entries = 0
    for idx, (x, y) in enumerate(zip(u, v)):
        x, y = _edge(x, y, idx)
        ax = adj.get(x)
        if ax is None:
            ax = adj[x] = set()
        if y in ax:
            raise DuplicateEdge(x, y, idx)
        ay = adj.get(y)
        if ay is None:
            ay = adj[y] = set()
        ax.add(y)
        ay.add(x)
        entries += 2
        stack = [((x, y), y)]
        while stack:
            s, last = stack.pop()
            k = len(s)
            counts[k - 1] += 1
            if emit is not None:
                emit(s, idx)
            if k > d_max:
                continue
            layer = layers[k]
            sets = []
            for n in s:
                ln = layer.get(n)
                if ln is None:
                    ln = layer[n] = set()
                if k > 2 and n != last and last not in ln:
                    ln.add(last)
                    entries += 1
                sets.append(ln)
            sets.sort(key=len)
            zs = sets[0].intersection(*sets[1:])
            if zs:
                for z in sorted(zs, reverse=True):
                    i = bisect_left(s, z)
                    stack.append((s[:i] + (z,) + s[i:], z))
    state.entries = entries
    return {"counts": counts, "state_entries": entries, "state_keys": state.keys,
            "state": state}
