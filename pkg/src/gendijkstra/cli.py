"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 bad arguments, 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from typing import Optional, Sequence

from . import _backend
from .generate import GenSpec, generate, instance_seeds
from .graph import Graph, GraphError, load_file, save
from .oracle import antichain_bound, check_optimality, label_bound, oracle_solve
from .search import InvalidSourceError, generic_dijkstra
from .tree import ResultError, load_result

EXIT_OK, EXIT_INPUT, EXIT_ARGS, EXIT_MISMATCH = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_graph(path: str) -> Graph:
    try:
        return load_file(path)
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read graph {path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise _Fail(EXIT_INPUT, f"bad graph {path}: {exc}") from None


def _check_source(g: Graph, s: int) -> None:
    if not 0 <= s < g.vertex_count:
        raise _Fail(EXIT_ARGS, f"source {s} is not a vertex (graph has {g.vertex_count})")


def _write(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot write {output}: {exc.strerror or exc}") from None


def _spec_from(args, seed: int, units: Optional[int] = None) -> GenSpec:
    try:
        return GenSpec(
            vertices=args.vertices,
            edges=args.edges,
            units=units if units is not None else args.units,
            max_cost=args.max_cost,
            fill=args.fill,
            seed=seed,
        )
    except ValueError as exc:
        raise _Fail(EXIT_ARGS, str(exc)) from None


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    _check_source(g, args.source)
    tree = generic_dijkstra(g, args.source, "no-prune" if args.no_prune else "pruned")
    _write(tree.dumps(), args.output)
    return EXIT_OK


def _fmt_sets(sets) -> str:
    return json.dumps([sorted(s) for s in sets])


def cmd_compare(args) -> int:
    if args.graph:
        instances = [("file", _read_graph(args.graph))]
    else:
        instances = [
            (f"seed={seed}", generate(_spec_from(args, seed)))
            for seed in instance_seeds(args.seed, args.count)
        ]
    modes = ["pruned"] if args.skip_no_prune else ["pruned", "no-prune"]
    for i, (tag, g) in enumerate(instances):
        _check_source(g, args.source)
        want = oracle_solve(g, args.source).label_sets()
        for mode in modes:
            order = args.queue_order if mode == "pruned" else "corrected"
            got = generic_dijkstra(g, args.source, mode, queue_order=order).label_sets()
            if got != want:
                print(f"instance {i} ({tag}): MISMATCH [{mode}]")
                print(f"  engine: {_fmt_sets(got)}")
                print(f"  oracle: {_fmt_sets(want)}")
                return EXIT_MISMATCH
        print(f"instance {i} ({tag}): MATCH")
    print(f"summary: {len(instances)} instance(s), all MATCH")
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate(_spec_from(args, args.seed))
    _write(save(g), args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    _check_source(g, args.source)
    try:
        with open(args.result, encoding="utf-8") as fh:
            _, sets = load_result(fh.read(), g.vertex_count)
    except OSError as exc:
        raise _Fail(EXIT_INPUT, f"cannot read result {args.result}: {exc.strerror or exc}") from None
    except ResultError as exc:
        raise _Fail(EXIT_INPUT, f"bad result {args.result}: {exc}") from None
    report = check_optimality(g, args.source, sets)
    if report.ok:
        print("PASS")
        return EXIT_OK
    print(f"FAIL/{report.first.kind}")
    for v in report.violations:
        print(json.dumps(v.to_document()))
    return EXIT_MISMATCH


def cmd_bench(args) -> int:
    try:
        unit_list = [int(x) for x in str(args.units).split(",") if x]
    except ValueError:
        raise _Fail(EXIT_ARGS, "--units takes a comma-separated list of integers") from None
    backends = ["python"] + (["compiled"] if _backend.HAVE_COMPILED else [])
    rows = []
    for u in unit_list:
        g = generate(_spec_from(args, args.seed, units=u))
        _check_source(g, args.source)
        for backend in backends:
            times = []
            tree = None
            for _ in range(max(args.count, 1)):
                t0 = time.perf_counter()
                tree = generic_dijkstra(g, args.source, backend=backend)
                times.append(time.perf_counter() - t0)
            rows.append(
                {
                    "units": u,
                    "vertices": g.vertex_count,
                    "edges": len(g.edges),
                    "backend": backend,
                    "reps": len(times),
                    "median_s": round(statistics.median(times), 6),
                    "popped": tree.stats.popped,
                    "popped_bound": g.vertex_count * label_bound(u),
                    "max_labels": tree.stats.max_labels,
                    "antichain_bound": antichain_bound(u),
                    "label_bound": label_bound(u),
                }
            )
    if args.format == "json":
        _write(json.dumps(rows, indent=2) + "\n", args.output)
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["units"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _write(buf.getvalue(), args.output)
    return EXIT_OK


def _add_gen_flags(p: argparse.ArgumentParser, units_type=int, units_default=4) -> None:
    p.add_argument("--vertices", type=int, default=12)
    p.add_argument("--edges", type=int, default=40)
    p.add_argument("--units", type=units_type, default=units_default)
    p.add_argument("--fill", type=float, default=0.6)
    p.add_argument("--max-cost", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gendijkstra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the efficient-path tree")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare", help="compare the engine with the filtered-graphs oracle")
    p.add_argument("--graph")
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--skip-no-prune", action="store_true", help="only compare the pruned engine")
    p.add_argument("--queue-order", choices=["corrected", "cost-only"], default="corrected", help=argparse.SUPPRESS)
    _add_gen_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="generate a random instance")
    _add_gen_flags(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify a result against the optimality fixed point")
    p.add_argument("--graph", required=True)
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--result", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time both engines over a family of instances")
    _add_gen_flags(p, units_type=str, units_default="2,4,8,16")
    p.add_argument("--source", type=int, default=0)
    p.add_argument("--count", type=int, default=3, help="repetitions per row")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"gendijkstra: {exc}", file=sys.stderr)
        return exc.code
    except InvalidSourceError as exc:
        print(f"gendijkstra: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
