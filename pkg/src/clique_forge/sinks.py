"""Clique consumers and the per-run summary record.

Enumerators push every clique into a sink through
``accept(clique, weight, seq)``. Sinks that only need per-dimension counts set
``counts_only = True``; enumerators then skip building clique objects and hand
over bulk counts through ``add_counts``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Protocol, runtime_checkable

from .core import Clique


@runtime_checkable
class CliqueSink(Protocol):
    def accept(self, clique: Clique, weight: float, seq: int) -> None: ...


class CountingSink:
    """Keeps per-dimension counts only."""

    counts_only = True

    def __init__(self):
        self.counts: Counter[int] = Counter()

    def accept(self, clique, weight, seq):
        self.counts[len(clique) - 1] += 1

    def add_counts(self, counts: dict[int, int]) -> None:
        for dim, n in counts.items():
            if n:
                self.counts[dim] += n

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class CollectingSink:
    """Stores every emission as ``(clique, weight, seq)``."""

    counts_only = False

    def __init__(self):
        self.records: list[tuple[Clique, float, int]] = []

    def accept(self, clique, weight, seq):
        self.records.append((clique, weight, seq))

    @property
    def cliques(self) -> list[Clique]:
        return [r[0] for r in self.records]

    def __len__(self) -> int:
        return len(self.records)


class NDJSONSink:
    """Streams ``{"nodes": [...], "dim": d, "weight": w, "seq": k}`` lines."""

    counts_only = False

    def __init__(self, fp: IO[str]):
        self.fp = fp
        self.written = 0

    def accept(self, clique, weight, seq):
        rec = {"nodes": list(clique), "dim": len(clique) - 1, "weight": weight, "seq": seq}
        self.fp.write(json.dumps(rec, separators=(",", ":")))
        self.fp.write("\n")
        self.written += 1


@dataclass
class RunSummary:
    """What an enumerator reports after a full pass over its stream.

    ``counts`` maps dimension to the number of distinct cliques emitted.
    ``state_entries`` is the total number of node ids stored across the
    neighbourhood state at the end of the run; the state only grows, so this
    is also its peak.
    """

    algorithm: str
    d_max: int
    counts: dict[int, int] = field(default_factory=dict)
    emitted: int = 0
    state_entries: int = 0
    state_keys: int = 0
    backend: str = "python"
    extra: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, dim: int) -> int:
        return self.counts.get(dim, 0)
