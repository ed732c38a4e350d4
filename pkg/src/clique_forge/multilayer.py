"""Evolving multilayer node-neighbourhood enumerators.

Instead of keying state by faces, each node keeps one neighbour set per clique
size. When a clique is extended by a node ``last``, every other member gains
``last`` in the next layer; intersecting that layer over all members yields the
next extensions. State stays bounded by ``nodes x layers``, but the scheme is
only exactly-once when edges arrive in lexicographic order, so that is the
default here.
"""

from __future__ import annotations

import logging

from ._backend import as_stream, run_recursive
from .boundary import _add_edge, _emitter
from .filtration import OrderPolicy, reorder
from .sinks import RunSummary

log = logging.getLogger(__name__)

__all__ = ["enumerate_multilayer_fixed", "enumerate_multilayer_recursive"]


def _prepare(stream, order, allow_any_order):
    stream = as_stream(stream)
    order = OrderPolicy.parse(order)
    if order is OrderPolicy.LEXICOGRAPHIC:
        if stream.order is not OrderPolicy.LEXICOGRAPHIC:
            stream = reorder(stream, order)
        return stream
    if not allow_any_order:
        raise ValueError(
            "the multilayer family is only exactly-once on lexicographically ordered "
            "streams; pass allow_any_order=True to run on another order anyway")
    log.warning("multilayer enumeration on a %s-ordered stream may miss or repeat cliques",
                order.value)
    return reorder(stream, order) if order is not OrderPolicy.AS_GIVEN else stream


def _grow(layer, members, last):
    """Give ``last`` to every member but itself; return the shared extensions."""
    sets = []
    for n in members:
        s = layer.get(n)
        if s is None:
            s = layer[n] = set()
        if n != last:
            s.add(last)
        sets.append(s)
    sets.sort(key=len)
    return sorted(sets[0].intersection(*sets[1:]))


def enumerate_multilayer_fixed(stream, d_max: int, sink, *, order="lex",
                               allow_any_order: bool = False) -> RunSummary:
    """Unrolled multilayer enumerator for ``d_max`` of 3, 4 or 5."""
    if d_max not in (3, 4, 5):
        raise ValueError(f"fixed-depth enumerator supports d_max 3, 4 or 5, not {d_max}; "
                         "use enumerate_multilayer_recursive")
    stream = _prepare(stream, order, allow_any_order)
    emit = _emitter(stream, sink)
    adj: dict[int, set] = {}
    pi3: dict[int, set] = {}
    pi4: dict[int, set] = {}
    pi5: dict[int, set] = {}
    counts = dict.fromkeys(range(1, d_max + 1), 0)
    for idx, (x, y) in enumerate(stream.pairs()):
        _add_edge(adj, x, y, idx)
        emit((x, y), idx)
        counts[1] += 1
        for z in sorted(adj[x] & adj[y]):
            emit(tuple(sorted((x, y, z))), idx)
            counts[2] += 1
            for w in _grow(pi3, (x, y, z), z):
                emit(tuple(sorted((x, y, z, w))), idx)
                counts[3] += 1
                if d_max < 4:
                    continue
                for q in _grow(pi4, (x, y, z, w), w):
                    emit(tuple(sorted((x, y, z, w, q))), idx)
                    counts[4] += 1
                    if d_max < 5:
                        continue
                    for r in _grow(pi5, (x, y, z, w, q), q):
                        emit(tuple(sorted((x, y, z, w, q, r))), idx)
                        counts[5] += 1
    entries = sum(len(s) for m in (adj, pi3, pi4, pi5) for s in m.values())
    keys = sum(1 for m in (adj, pi3, pi4, pi5) for s in m.values() if s)
    counts = {d: c for d, c in counts.items() if c}
    return RunSummary("multilayer-fixed", d_max, counts, sum(counts.values()),
                      state_entries=entries, state_keys=keys)


def enumerate_multilayer_recursive(stream, d_max: int, sink, *, order="lex",
                                   allow_any_order: bool = False,
                                   backend: str | None = None) -> RunSummary:
    """Multilayer enumerator for any ``d_max >= 2``.

    The stream is put in lexicographic order first unless ``order`` says
    otherwise; any other order requires ``allow_any_order=True``.
    """
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    stream = _prepare(stream, order, allow_any_order)
    return run_recursive("multilayer", stream, d_max, sink, backend, "multilayer-recursive")
