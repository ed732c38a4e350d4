"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 bad flags, 3 malformed
input (or a graph too large for the oracle), 4 enumerator error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from contextlib import nullcontext

from . import _backend
from .algorithms import ALGORITHMS, ALIASES, TRIANGLE_ONLY, load_input, run_algorithm
from .bench import emit_report, load_plan, resolve_count_convention, run_benchmark
from .errors import CliqueForgeError, MalformedInput, OracleTooLarge
from .filtration import OrderPolicy, dump_edge_stream, reorder
from .oracle import brute_force_cliques
from .sinks import CollectingSink, CountingSink, NDJSONSink

log = logging.getLogger("clique_forge")

EXIT_MISMATCH = 1
EXIT_INPUT = 3
EXIT_ENUMERATOR = 4

ALGO_CHOICES = sorted(set(ALGORITHMS) | set(ALIASES))


def _add_source(p: argparse.ArgumentParser, required=True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--input", help="edge list CSV (two integer columns, optional header)")
    src.add_argument("--edges", help="serialised edge stream (u,v,weight CSV)")
    src.add_argument("--complete-n", type=int, metavar="N", help="complete graph on N nodes")
    src.add_argument("--pcd", help="ASCII PCD point cloud (needs --epsilon)")
    p.add_argument("--epsilon", type=float, help="Vietoris-Rips cutoff radius for --pcd")
    p.add_argument("--seed", type=int, default=0, help="seed for --complete-n weights")


def _source(args) -> dict:
    if args.pcd is not None:
        if args.epsilon is None:
            raise _UsageError("--pcd needs --epsilon")
        return {"kind": "pcd", "path": args.pcd, "epsilon": args.epsilon}
    if args.complete_n is not None:
        return {"kind": "complete", "n": args.complete_n, "seed": args.seed}
    if args.edges is not None:
        return {"kind": "edges", "path": args.edges}
    return {"kind": "csv", "path": args.input}


class _UsageError(Exception):
    pass


def _load(args):
    try:
        return load_input(_source(args))
    except (MalformedInput, OSError, UnicodeDecodeError) as exc:
        raise _InputError(str(exc)) from exc


class _InputError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clique-forge", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate cliques of an edge filtration")
    _add_source(p)
    p.add_argument("--algo", choices=ALGO_CHOICES, default="boundary")
    p.add_argument("--dmax", type=int, required=True, help="largest clique dimension")
    p.add_argument("--order", choices=[o.value for o in OrderPolicy],
                   help="edge order (default: lex for multilayer, weight otherwise)")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--out", help="write NDJSON cliques here (default: stdout)")
    out.add_argument("--count-only", action="store_true", help="print per-dimension counts")
    p.add_argument("--backend", choices=["auto", "compiled", "python"], default="auto")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check every enumerator against the brute-force oracle")
    _add_source(p)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--cap", type=int, default=40, help="oracle node cap")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark plan (NDJSON, one run per line)")
    p.add_argument("--plan", required=True)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--parallel", type=int, default=0, help="concurrent runs (count checks only)")
    p.add_argument("--inline", action="store_true", help="run in this process (no isolation)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("filtration", help="write the ordered edge stream as u,v,weight CSV")
    _add_source(p)
    p.add_argument("--order", choices=[o.value for o in OrderPolicy], default="weight")
    p.add_argument("--out")
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("convention", help="find which dimensions a published total counts")
    _add_source(p)
    p.add_argument("--published", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--n-nodes", type=int)
    p.set_defaults(func=cmd_convention)
    return parser


def _format_counts(counts) -> str:
    return " ".join(f"dim{d}={c}" for d, c in sorted(counts.items()))


def cmd_enumerate(args) -> int:
    if args.dmax < 1:
        raise _UsageError("--dmax must be >= 1")
    stream = _load(args)
    backend = None if args.backend == "auto" else args.backend
    if args.count_only:
        sink = CountingSink()
        summary = run_algorithm(args.algo, stream, args.dmax, sink, args.order, backend=backend)
        line = _format_counts(summary.counts)
        if "raw" in summary.extra:
            line += f" raw={summary.extra['raw']}"
        print(line)
        return 0
    ctx = open(args.out, "w", encoding="utf-8") if args.out else nullcontext(sys.stdout)
    with ctx as fh:
        summary = run_algorithm(args.algo, stream, args.dmax, NDJSONSink(fh), args.order,
                                backend=backend)
    log.info("%s: %s", summary.algorithm, _format_counts(summary.counts))
    return 0


def verification_targets(d_max: int):
    """(label, algorithm, order, backend) for every configuration ``verify`` checks."""
    targets = []
    for backend in _backend.BACKENDS:
        for order in OrderPolicy:
            targets.append((f"boundary-recursive[{order.value},{backend}]",
                            "boundary-recursive", order, backend))
        targets.append((f"multilayer-recursive[lex,{backend}]", "multilayer-recursive",
                        OrderPolicy.LEXICOGRAPHIC, backend))
    if d_max in (3, 4, 5):
        targets.append(("boundary-fixed[weight]", "boundary-fixed",
                        OrderPolicy.BY_WEIGHT_THEN_LEX, None))
        targets.append(("multilayer-fixed[lex]", "multilayer-fixed",
                        OrderPolicy.LEXICOGRAPHIC, None))
    targets.append(("triangles[weight]", "triangles", OrderPolicy.BY_WEIGHT_THEN_LEX, None))
    for name in ("edge-iter", "k3", "forward"):
        targets.append((name, name, None, None))
    return targets


def cmd_verify(args) -> int:
    stream = _load(args)
    expected = brute_force_cliques(stream, args.dmax, cap=args.cap)
    ok = True
    for label, algo, order, backend in verification_targets(args.dmax):
        sink = CollectingSink()
        run_algorithm(algo, stream, args.dmax, sink, order, backend=backend)
        got = sink.cliques
        want = expected
        if algo in TRIANGLE_ONLY:
            # the triangle finder also reports edges; the baselines report triangles only
            lo = 1 if algo == "triangles" else 2
            want = {c for c in expected if lo <= len(c) - 1 <= 2}
        if algo == "edge-iter":
            raw = len(got)
            got_set = set(got)
            good = got_set == want and raw == 3 * len(got_set)
        else:
            got_set = set(got)
            good = got_set == want and len(got) == len(got_set)
        if good:
            print(f"ok    {label}: {len(got_set)} cliques")
            continue
        ok = False
        missing = sorted(want - got_set, key=lambda c: (len(c), c))
        extra = sorted(got_set - want, key=lambda c: (len(c), c))
        if missing:
            detail = f"missing {missing[0]!r}"
        elif extra:
            detail = f"unexpected {extra[0]!r}"
        else:
            detail = f"{len(got) - len(got_set)} repeated emissions"
        print(f"FAIL  {label}: {detail} ({len(missing)} missing, {len(extra)} unexpected)")
    return 0 if ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    try:
        plan = load_plan(args.plan)
    except (OSError, ValueError) as exc:
        raise _InputError(f"cannot read plan: {exc}") from exc
    runs = run_benchmark(plan, isolate=not args.inline, parallel=args.parallel)
    for r in runs:
        counts = _format_counts(r.per_dim_counts)
        tail = f" ({r.error})" if r.error else ""
        t = f"{r.wall_time_s:.3f}s" if r.wall_time_s is not None else "-"
        print(f"{r.algorithm} d_max={r.d_max} {r.status} {t} {counts}{tail}", file=sys.stderr)
    csv_path, nd_path = emit_report(runs, args.out_dir)
    print(f"wrote {csv_path} and {nd_path}", file=sys.stderr)
    return 0


def cmd_filtration(args) -> int:
    stream = reorder(_load(args), args.order)
    text = dump_edge_stream(stream)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_convention(args) -> int:
    stream = _load(args)
    print(resolve_count_convention(stream, args.published, args.dmax, args.n_nodes))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"clique-forge: error: {exc}", file=sys.stderr)
        return 2
    except _InputError as exc:
        print(f"clique-forge: malformed input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MalformedInput, OracleTooLarge) as exc:
        print(f"clique-forge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CliqueForgeError, ValueError) as exc:
        print(f"clique-forge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENUMERATOR


if __name__ == "__main__":
    sys.exit(main())
