"""Compiled core vs pure-Python kernels on complete-graph filtrations.

    python3 benchmarks/bench_backends.py --sizes 20 30 40 --dmax 4

Both backends run the same recursive enumerators with a counting sink; the
script checks their counts agree and prints wall time and the speed-up.
"""

import argparse
import json
import sys
import time

from clique_forge import (CountingSink, HAVE_COMPILED, complete_graph,
                          enumerate_boundary_recursive, enumerate_multilayer_recursive)

FAMILIES = {"boundary": enumerate_boundary_recursive, "multilayer": enumerate_multilayer_recursive}


def time_run(fn, stream, d_max, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        sink = CountingSink()
        t0 = time.perf_counter()
        summary = fn(stream, d_max, sink, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, dict(sink.counts), summary.state_entries


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 30, 40, 50])
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write rows as NDJSON here")
    args = ap.parse_args(argv)
    if not HAVE_COMPILED:
        print("compiled core not built; nothing to compare", file=sys.stderr)
        return 1

    rows = []
    print(f"{'family':<11}{'n':>5}{'python s':>12}{'compiled s':>12}{'speed-up':>10}")
    for n in args.sizes:
        stream = complete_graph(n, seed=0)
        for family, fn in FAMILIES.items():
            py_t, py_counts, py_state = time_run(fn, stream, args.dmax, "python", args.repeat)
            c_t, c_counts, c_state = time_run(fn, stream, args.dmax, "compiled", args.repeat)
            if (py_counts, py_state) != (c_counts, c_state):
                print(f"backends disagree on {family} n={n}", file=sys.stderr)
                return 2
            rows.append({"family": family, "n": n, "d_max": args.dmax, "python_s": py_t,
                         "compiled_s": c_t, "cliques": sum(c_counts.values())})
            print(f"{family:<11}{n:>5}{py_t:>12.4f}{c_t:>12.4f}{py_t / c_t:>9.1f}x")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            for r in rows:
                fh.write(json.dumps(r) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
