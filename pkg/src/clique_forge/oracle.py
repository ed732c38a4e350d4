"""Brute-force clique listing used as ground truth in tests and ``verify``."""

from __future__ import annotations

from collections import Counter

from .core import Clique
from .errors import OracleTooLarge

DEFAULT_CAP = 40


def brute_force_cliques(edges, d_max: int, cap: int = DEFAULT_CAP) -> set[Clique]:
    """Every complete subgraph on 2 to ``d_max + 1`` nodes.

    Grows cliques in ascending node order, keeping only candidates adjacent to
    every member so far. Refuses graphs with more than ``cap`` nodes.
    """
    adj: dict[int, set] = {}
    for e in edges:
        a, b = int(e[0]), int(e[1])
        if a == b:
            continue
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if len(adj) > cap:
        raise OracleTooLarge(f"{len(adj)} nodes exceeds the oracle cap of {cap}")
    out: set[Clique] = set()
    if d_max < 1:
        return out

    def grow(members, candidates):
        out.add(Clique._trusted(members))
        if len(members) > d_max:
            return
        for z in sorted(candidates):
            grow(members + (z,), {c for c in candidates if c > z and c in adj[z]})

    for a in sorted(adj):
        for b in sorted(adj[a]):
            if b > a:
                grow((a, b), {c for c in adj[a] & adj[b] if c > b})
    return out


def per_dim_census(cliques) -> dict[int, int]:
    return dict(sorted(Counter(len(c) - 1 for c in cliques).items()))
