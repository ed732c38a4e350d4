"""Benchmark harness: timed, memory-measured enumeration runs and their reports.

Each run executes in its own child interpreter so that the peak resident set
size it reports belongs to that run alone. Alongside the OS figure, every row
carries the enumerator's ``state_entries`` counter, which is deterministic and
therefore the one to assert on.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import resource
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .algorithms import canonical_name, default_order, describe_input, load_input, run_algorithm
from .errors import AmbiguousConvention, NoConventionMatches
from .sinks import CountingSink

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT_S = 30 * 60
CONVENTIONS = ("1..d", "0..d", "2..d")

BASE_COLUMNS = ["algorithm", "input", "d_max", "order_policy", "seed", "status", "wall_time_s",
                "peak_rss_bytes", "state_entries_peak", "count_total"]


def default_timeout() -> float:
    return float(os.environ.get("CLIQUE_FORGE_TIMEOUT_S", DEFAULT_TIMEOUT_S))


@dataclass
class BenchRun:
    """One benchmark run: what to execute and, once done, what it measured."""

    algorithm: str
    input: dict
    d_max: int
    order_policy: str | None = None
    seed: int = 0
    convention: str = "1..d"
    timeout_s: float | None = None
    backend: str | None = None
    status: str = "pending"
    wall_time_s: float | None = None
    peak_memory: int | None = None
    state_entries_peak: int | None = None
    n_nodes: int | None = None
    per_dim_counts: dict = field(default_factory=dict)
    total_count_incl_convention: int | None = None
    error: str | None = None

    @classmethod
    def from_dict(cls, d: dict) -> "BenchRun":
        known = {k: v for k, v in d.items() if k in cls.__dataclass_fields__}
        run = cls(**known)
        run.algorithm = canonical_name(run.algorithm)
        if run.order_policy is None:
            run.order_policy = default_order(run.algorithm).value
        if "seed" not in d and "seed" in run.input:
            run.seed = int(run.input["seed"])
        if run.convention not in CONVENTIONS:
            raise ValueError(f"unknown counting convention {run.convention!r}")
        return run

    def spec(self) -> dict:
        return {"algorithm": self.algorithm, "input": self.input, "d_max": self.d_max,
                "order_policy": self.order_policy, "seed": self.seed,
                "convention": self.convention, "backend": self.backend}


def total_under(convention: str, counts: dict, n_nodes: int, d_max: int) -> int:
    lo = {"1..d": 1, "0..d": 0, "2..d": 2}[convention]
    total = sum(c for d, c in counts.items() if lo <= d <= d_max)
    if lo == 0:
        total += n_nodes
    return total


def execute(spec: dict) -> dict:
    """Run one spec in this process; returns the measured fields."""
    run = BenchRun.from_dict(spec)
    stream = load_input(run.input)
    sink = CountingSink()
    t0 = time.perf_counter()
    summary = run_algorithm(run.algorithm, stream, run.d_max, sink, run.order_policy,
                            backend=run.backend)
    wall = time.perf_counter() - t0
    counts = {int(d): int(c) for d, c in sorted(sink.counts.items())}
    n_nodes = int(len(stream.nodes())) if len(stream) else 0
    return {
        "status": "ok",
        "wall_time_s": wall,
        "peak_memory": resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024,
        "state_entries_peak": summary.state_entries,
        "n_nodes": n_nodes,
        "per_dim_counts": counts,
        "backend": summary.backend,
    }


def _run_isolated(run: BenchRun) -> BenchRun:
    timeout = run.timeout_s if run.timeout_s is not None else default_timeout()
    cmd = [sys.executable, "-m", "clique_forge.bench", json.dumps(run.spec())]
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True, timeout=timeout)
    except subprocess.TimeoutExpired:
        run.status = "not_computed"
        run.error = f"timeout after {timeout:g}s"
        return run
    if proc.returncode != 0:
        run.status = "not_computed"
        lines = proc.stderr.strip().splitlines()
        run.error = lines[-1] if lines else f"exit code {proc.returncode}"
        return run
    _apply(run, json.loads(proc.stdout.strip().splitlines()[-1]))
    return run


def _run_inline(run: BenchRun) -> BenchRun:
    try:
        _apply(run, execute(run.spec()))
    except Exception as exc:  # noqa: BLE001
        run.status = "not_computed"
        run.error = f"{type(exc).__name__}: {exc}"
    return run


def _apply(run: BenchRun, result: dict) -> None:
    run.status = result["status"]
    run.wall_time_s = result["wall_time_s"]
    run.peak_memory = result["peak_memory"]
    run.state_entries_peak = result["state_entries_peak"]
    run.n_nodes = result["n_nodes"]
    run.backend = result.get("backend", run.backend)
    run.per_dim_counts = {int(d): c for d, c in result["per_dim_counts"].items()}
    run.total_count_incl_convention = total_under(run.convention, run.per_dim_counts,
                                                  run.n_nodes, run.d_max)


def run_benchmark(plan, *, isolate: bool = True, parallel: int = 0) -> list[BenchRun]:
    """Execute every run in ``plan`` and return them with measurements filled in.

    Runs go one at a time unless ``parallel`` > 1, which only makes sense for
    count-validation passes. A run that crashes or times out comes back with
    status ``not_computed`` instead of raising.
    """
    runs = []
    for item in plan:
        if isinstance(item, BenchRun):
            runs.append(item)
            continue
        try:
            runs.append(BenchRun.from_dict(item))
        except (ValueError, TypeError, KeyError) as exc:
            bad = BenchRun(algorithm=str(item.get("algorithm", "?")), input=item.get("input", {}),
                           d_max=int(item.get("d_max", 0) or 0), status="not_computed",
                           error=f"invalid run spec: {exc}")
            runs.append(bad)
    todo = [r for r in runs if r.status == "pending"]
    worker = _run_isolated if isolate else _run_inline
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            list(pool.map(worker, todo))
    else:
        for r in todo:
            worker(r)
    for r in runs:
        log.info("%s %s d_max=%s: %s", r.algorithm, describe_input(r.input) if r.input else "?",
                 r.d_max, r.status)
    return runs


def load_plan(path) -> list[dict]:
    plan = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                plan.append(json.loads(line))
    return plan


def report_rows(runs) -> list[dict]:
    rows = []
    for r in runs:
        row = {
            "algorithm": r.algorithm,
            "input": describe_input(r.input) if r.input else "",
            "d_max": r.d_max,
            "order_policy": r.order_policy or "",
            "seed": r.seed,
            "status": r.status,
            "wall_time_s": r.wall_time_s,
            "peak_rss_bytes": r.peak_memory,
            "state_entries_peak": r.state_entries_peak,
            "count_total": r.total_count_incl_convention,
        }
        for d, c in r.per_dim_counts.items():
            row[f"count_dim_{d}"] = c
        rows.append(row)
    return rows


def emit_report(runs, out_dir, stem: str = "report") -> tuple[Path, Path]:
    """Write ``<stem>.csv`` and ``<stem>.ndjson`` into ``out_dir``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    runs = list(runs)
    rows = report_rows(runs)
    top = max([1] + [d for r in runs for d in r.per_dim_counts] + [r.d_max for r in runs])
    columns = BASE_COLUMNS + [f"count_dim_{d}" for d in range(1, top + 1)]
    csv_path = out_dir / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in columns})
    nd_path = out_dir / f"{stem}.ndjson"
    with open(nd_path, "w", encoding="utf-8") as fh:
        for r in runs:
            rec = asdict(r)
            rec["per_dim_counts"] = {str(k): v for k, v in r.per_dim_counts.items()}
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return csv_path, nd_path


# -- counting conventions ------------------------------------------------------

def convention_totals(stream, d_max: int, n_nodes: int | None = None,
                      algorithm: str = "multilayer-recursive") -> dict[str, int]:
    sink = CountingSink()
    run_algorithm(algorithm, stream, d_max, sink)
    if n_nodes is None:
        n_nodes = int(len(stream.nodes())) if len(stream) else 0
    return {c: total_under(c, sink.counts, n_nodes, d_max) for c in CONVENTIONS}


def resolve_count_convention(stream, published_total: int, d_max: int,
                             n_nodes: int | None = None) -> str:
    """Find which dimensions a published cumulative clique count includes.

    Returns ``"1..d"`` (edges upward), ``"0..d"`` (nodes too) or ``"2..d"``
    (triangles upward). ``n_nodes`` defaults to the nodes touched by an edge.
    """
    totals = convention_totals(stream, d_max, n_nodes)
    hits = [c for c, t in totals.items() if t == published_total]
    if not hits:
        raise NoConventionMatches(f"published total {published_total} matches none of {totals}")
    if len(hits) > 1:
        raise AmbiguousConvention(f"published total {published_total} matches {hits}")
    return hits[0]


# -- plans mirroring the published protocol ------------------------------------

def complete_graph_plan(sizes=range(30, 151, 10), d_max: int = 4,
                        algorithms=("boundary-recursive", "multilayer-recursive"), seed: int = 0):
    return [{"algorithm": a, "input": {"kind": "complete", "n": n, "seed": seed}, "d_max": d_max}
            for n in sizes for a in algorithms]


def pcd_sweep_plan(path, epsilons, dims=(2, 3, 4, 5),
                   algorithms=("boundary-recursive", "multilayer-recursive")):
    return [{"algorithm": a, "input": {"kind": "pcd", "path": str(path), "epsilon": eps},
             "d_max": d} for eps in epsilons for d in dims for a in algorithms]


def real_network_plan(path, d_maxes=range(2, 11),
                      algorithms=("boundary-recursive", "multilayer-recursive")):
    return [{"algorithm": a, "input": {"kind": "csv", "path": str(path)}, "d_max": d}
            for d in d_maxes for a in algorithms]


def _child_main(argv) -> int:
    result = execute(json.loads(argv[0]))
    print(json.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(_child_main(sys.argv[1:]))
