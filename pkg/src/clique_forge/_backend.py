"""Backend selection and the shared driver for the recursive enumerators."""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .core import Clique
from .errors import DuplicateEdge, MalformedInput
from .filtration import EdgeStream, OrderPolicy
from .sinks import RunSummary

try:
    if os.environ.get("CLIQUE_FORGE_PURE"):
        raise ImportError("pure Python backend forced")
    from . import _core
except ImportError:
    _core = None

HAVE_COMPILED = _core is not None
BACKENDS = ("compiled", "python") if HAVE_COMPILED else ("python",)
DEFAULT_BACKEND = BACKENDS[0]


def resolve_backend(backend: str | None) -> str:
    if backend is None or backend == "auto":
        return DEFAULT_BACKEND
    if backend not in ("compiled", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled core is not available; rebuild the package")
    return backend


def as_stream(edges) -> EdgeStream:
    """Accept an EdgeStream or any iterable of ``(u, v[, w])`` without dedup."""
    if isinstance(edges, EdgeStream):
        return edges
    rows = [tuple(e) for e in edges]
    u = [r[0] for r in rows]
    v = [r[1] for r in rows]
    w = [float(r[2]) if len(r) > 2 else 0.0 for r in rows]
    for i, (a, b) in enumerate(zip(u, v)):
        if a == b:
            raise MalformedInput(f"self-loop on node {a} at stream position {i}")
    lo = [min(a, b) for a, b in zip(u, v)]
    hi = [max(a, b) for a, b in zip(u, v)]
    return EdgeStream(lo, hi, w, OrderPolicy.AS_GIVEN, validate=False)


class WeightOf:
    """Filtration value of a clique: the largest weight among its edges."""

    def __init__(self, stream: EdgeStream):
        w = stream.weight
        self.weights = w.tolist()
        if not len(w) or not w.any():
            self.mode = "zero"
        elif (np.diff(w) >= 0).all():
            # clique completes at its last-arriving edge, which is its heaviest
            self.mode = "sorted"
        else:
            self.mode = "lookup"
            self.table = {(a, b): x for a, b, x in
                          zip(stream.u.tolist(), stream.v.tolist(), self.weights)}

    def __call__(self, nodes, edge_idx) -> float:
        if self.mode == "zero":
            return 0.0
        if self.mode == "sorted":
            return self.weights[edge_idx]
        t = self.table
        return max(t[(nodes[i], nodes[j])] for i in range(len(nodes))
                   for j in range(i + 1, len(nodes)))


def run_recursive(kind: str, edges, d_max: int, sink, backend: str | None,
                  algorithm: str) -> RunSummary:
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    stream = as_stream(edges)
    backend = resolve_backend(backend)
    counts_only = getattr(sink, "counts_only", False)
    emit = None
    seq = [0]
    if not counts_only:
        weight_of = WeightOf(stream)
        accept = sink.accept

        def emit(nodes, edge_idx):
            accept(Clique._trusted(nodes), weight_of(nodes, edge_idx), seq[0])
            seq[0] += 1

    if backend == "compiled":
        res = _run_compiled(kind, stream, d_max, emit)
    else:
        fn = (_pykernels.boundary_recursive if kind == "boundary"
              else _pykernels.multilayer_recursive)
        res = fn(stream.u.tolist(), stream.v.tolist(), d_max, emit)
    counts = {d: c for d, c in enumerate(res["counts"]) if c}
    if counts_only:
        sink.add_counts(counts)
    return RunSummary(algorithm=algorithm, d_max=d_max, counts=counts,
                      emitted=sum(counts.values()), state_entries=res["state_entries"],
                      state_keys=res["state_keys"], backend=backend)


def _run_compiled(kind, stream, d_max, emit):
    labels, inverse = np.unique(np.concatenate([stream.u, stream.v]), return_inverse=True)
    m = len(stream)
    du = inverse[:m].astype(np.int32)
    dv = inverse[m:].astype(np.int32)
    fn = _core.boundary if kind == "boundary" else _core.multilayer
    res = fn(du, dv, len(labels), d_max, emit, labels.tolist())
    if res["status"] == 1:
        i = res["bad_edge"]
        raise DuplicateEdge(int(stream.u[i]), int(stream.v[i]), i)
    if res["status"] == 3:
        i = res["bad_edge"]
        raise MalformedInput(f"self-loop on node {int(stream.u[i])} at stream position {i}")
    return res
