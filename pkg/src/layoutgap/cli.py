"""Command line interface: ``layoutgap {sample,solve,gap,bounds,experiment}``.

Exit codes: 0 on success, 1 for usage errors (bad or conflicting flags,
invalid config), 2 for runtime failures (solver limit, unreadable or
malformed files).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import choose_parameters, predicted_band
from .experiments import ConfigError, ExperimentConfig, run_gap_experiment, write_report
from .graph import GraphFormatError, read_graph, write_graph
from .measures import ProblemKind
from .sampler import SparsitySchedule, sample_dnp, sample_gnp, schedule_p
from .solvers import SolverLimitError, gap, solve_max, solve_min

PROBLEMS = ("cutwidth", "vertsep", "edgebis", "vertbis")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}".rstrip("0").rstrip(".") if x == x else "nan"


def cmd_sample(args) -> int:
    if (args.p is None) == (args.c is None):
        raise UsageError("give exactly one of --p or --c (with optional --K)")
    if args.p is None:
        p = schedule_p(SparsitySchedule(K=1.0 if args.K is None else args.K, c=args.c), args.n)
    else:
        if args.K is not None:
            raise UsageError("--K only applies together with --c")
        p = args.p
    if not 0.0 <= p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {p}")
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    sampler = sample_dnp if args.kind == "dag" else sample_gnp
    g = sampler(args.n, p, args.seed)
    write_graph(g, args.out)
    print(f"n={g.n} m={g.m} p={p!r}")
    return 0


def cmd_solve(args) -> int:
    g = read_graph(args.input)
    kind = ProblemKind.of(args.problem, g.directed)
    solve = solve_min if args.objective == "min" else solve_max
    value, layout = solve(g, kind, args.limit)
    print(f"cost={value}")
    print("order=" + " ".join(map(str, layout)))
    return 0


def cmd_gap(args) -> int:
    g = read_graph(args.input)
    kind = ProblemKind.of(args.problem, g.directed)
    rep = gap(g, kind, args.limit)
    if args.json:
        print(json.dumps(rep.to_dict()))
    else:
        shown = "inf" if rep.gap == float("inf") else f"{rep.gap:.6f}"
        print(f"min={rep.min_cost} max={rep.max_cost} gap={shown}")
    return 0


def cmd_bounds(args) -> int:
    kind = ProblemKind.of(args.problem, args.directed)
    if kind.counts_edges and args.p is None:
        raise UsageError(f"--p is required for {args.problem}")
    p = 1.0 if args.p is None else args.p
    if not 0.0 <= p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {p}")
    try:
        params = choose_parameters(kind.family, args.c, delta=args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    band = predicted_band(kind, args.n, p, params)
    print(f"lower={_fmt(band.lower_min)} upper={_fmt(band.upper_max)}")
    print(f"log_failure_bound={band.log_failure_bound:.6f}")
    return 0


def cmd_experiment(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config is not valid JSON: {exc}") from None
    try:
        cfg = ExperimentConfig.from_dict(data)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    report = run_gap_experiment(cfg, workers=args.workers)
    write_report(report, args.out, format=args.format)
    print(f"rows={len(report.rows)}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="layoutgap", description="Layout cost gaps on random graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("sample", help="sample G(n,p) or D(n,p) to a graph file")
    sp.add_argument("--kind", choices=("ugraph", "dag"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--c", type=float, help="sparsity exponent: p = min(1, K n^-c)")
    sp.add_argument("--K", type=float, help="schedule scale (default 1)")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_sample)

    for name, func, help_ in (("solve", cmd_solve, "exact MIN or MAX with a witness layout"),
                              ("gap", cmd_gap, "exact MIN, MAX and their ratio")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--problem", choices=PROBLEMS, required=True)
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--limit", type=int, help="override the exact-solver size limit")
        if name == "solve":
            sp.add_argument("--objective", choices=("min", "max"), required=True)
        else:
            sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("bounds", help="predicted MIN/MAX band")
    sp.add_argument("--problem", choices=PROBLEMS, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float)
    sp.add_argument("--delta", type=float, required=True)
    sp.add_argument("--c", type=float, default=0.0, help="sparsity exponent for default exponents")
    sp.add_argument("--directed", action="store_true")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("experiment", help="run a gap experiment from a JSON config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, parse errors exit 1; hand the code back either way
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"layoutgap: error: {exc}", file=sys.stderr)
        return 1
    except (SolverLimitError, GraphFormatError, OSError) as exc:
        print(f"layoutgap: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"layoutgap: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
