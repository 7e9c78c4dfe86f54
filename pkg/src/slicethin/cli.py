"""Command-line front end: thin, compare, metrics, gen.

Exit codes: 0 on success, 1 for algorithm/metric errors (e.g. a 2D-only
baseline applied to a 3D pattern, margin violations), 2 for usage and
format errors (bad flags, unparseable schedules or files).
"""

from __future__ import annotations

import argparse
import sys

from . import baselines, metrics, shapes, thinning
from .formats import FormatError, ParseError, read_pattern, write_pattern
from .pattern import DimensionError
from .shapes import MarginError, RuggedSpec, ShapeSpec
from .thinning import Schedule, ScheduleError

ALGORITHMS = ("nd", "zs", "gh")


def _run_algorithm(algo, pattern, schedule=None):
    if algo == "nd":
        return thinning.thin(pattern, schedule)
    if algo == "zs":
        return baselines.zs_thin(pattern)
    return baselines.gh_thin(pattern)


def cmd_thin(args) -> int:
    pattern = read_pattern(args.input, args.input_format)
    schedule = Schedule.parse(args.schedule) if args.schedule else None
    if args.schedule and args.algo != "nd":
        raise ScheduleError("--schedule applies to --algo nd only")
    skeleton, iterations = _run_algorithm(args.algo, pattern, schedule)
    write_pattern(args.output, skeleton, args.output_format)
    if args.metrics:
        report = metrics.evaluate(pattern, skeleton, iterations)
        print(report.csv_row(args.algo))
    return 0


def cmd_compare(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for algo in algos:
        if algo not in ALGORITHMS:
            raise ScheduleError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")
    print(metrics.CSV_HEADER)
    reports = {algo: [] for algo in algos}
    for path in args.input:
        pattern = read_pattern(path, args.input_format)
        for algo in algos:
            skeleton, iterations = _run_algorithm(algo, pattern)
            report = metrics.evaluate(pattern, skeleton, iterations)
            reports[algo].append(report)
            print(report.csv_row(algo))
    if len(args.input) > 1:
        for algo in algos:
            print(_average_row(algo, reports[algo]))
    return 0


def _average_row(algo, reports):
    def mean(values):
        return sum(values) / len(values)

    mts = [r.m_t for r in reports if r.m_t is not None]
    mt = f"{mean(mts):.9g}" if mts else "NA"
    return (
        f"{algo}-avg,{mean([r.s_r for r in reports]):.9g},{mt},"
        f"{mean([r.n for r in reports]):.9g},"
        f"{mean([r.component_delta for r in reports]):.9g},"
        f"{mean([r.area_input for r in reports]):.9g},"
        f"{mean([r.area_skeleton for r in reports]):.9g}"
    )


def cmd_metrics(args) -> int:
    pattern = read_pattern(args.input, args.input_format)
    skeleton = read_pattern(args.skeleton, args.input_format)
    report = metrics.evaluate(pattern, skeleton, args.iterations)
    print(metrics.CSV_HEADER)
    print(report.csv_row(args.algorithm))
    return 0


_GEN_PARAMS = ("side", "width", "height", "radius", "base", "slope")


def cmd_gen(args) -> int:
    grid = _parse_grid(args.grid)
    params = {name: getattr(args, name) for name in _GEN_PARAMS if getattr(args, name)}
    try:
        pattern = shapes.generate(ShapeSpec(kind=args.shape, grid=grid, params=params))
    except MarginError:
        raise
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.rugged is not None:
        pattern = shapes.ruggedize(pattern, RuggedSpec(args.rugged, args.seed))
    write_pattern(args.output, pattern, args.output_format)
    return 0


class _UsageError(ValueError):
    pass


def _parse_grid(text):
    try:
        dims = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise _UsageError(f"bad grid {text!r}; expected e.g. 7x7 or 9x9x5") from None
    if len(dims) < 2 or any(d < 1 for d in dims):
        raise _UsageError(f"bad grid {text!r}; need >= 2 positive dimensions")
    return dims


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicethin", description="Thinning of k-dimensional binary patterns."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_thin = sub.add_parser("thin", help="thin one pattern file")
    p_thin.add_argument("--algo", choices=ALGORITHMS, required=True)
    p_thin.add_argument("--input", required=True)
    p_thin.add_argument("--output", required=True)
    p_thin.add_argument("--schedule", help="nd schedule, e.g. '1fb,0fb' or '2fb;1fb,0fb'")
    p_thin.add_argument("--metrics", action="store_true", help="print a metrics CSV row")
    p_thin.add_argument("--input-format", choices=("pbm", "ndbin"))
    p_thin.add_argument("--output-format", choices=("pbm", "ndbin"))
    p_thin.set_defaults(func=cmd_thin)

    p_cmp = sub.add_parser("compare", help="metrics table across algorithms")
    p_cmp.add_argument("--input", nargs="+", required=True)
    p_cmp.add_argument("--algos", default="zs,gh,nd", help="comma list from nd,zs,gh")
    p_cmp.add_argument("--input-format", choices=("pbm", "ndbin"))
    p_cmp.set_defaults(func=cmd_compare)

    p_met = sub.add_parser("metrics", help="evaluate an existing skeleton")
    p_met.add_argument("--input", required=True)
    p_met.add_argument("--skeleton", required=True)
    p_met.add_argument("--iterations", type=int, default=0)
    p_met.add_argument("--algorithm", default="unknown", help="label for the CSV row")
    p_met.add_argument("--input-format", choices=("pbm", "ndbin"))
    p_met.set_defaults(func=cmd_metrics)

    p_gen = sub.add_parser("gen", help="generate a synthetic test shape")
    p_gen.add_argument("--shape", required=True, choices=shapes.KINDS_2D + shapes.KINDS_3D)
    p_gen.add_argument("--grid", required=True, help="e.g. 7x7 or 9x9x5")
    for name in _GEN_PARAMS:
        p_gen.add_argument(f"--{name}", type=float)
    p_gen.add_argument("--rugged", type=float, help="boundary deletion probability")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", required=True)
    p_gen.add_argument("--output-format", choices=("pbm", "ndbin"))
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (
        ParseError,
        FormatError,
        ScheduleError,
        _UsageError,
        FileNotFoundError,
        IsADirectoryError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # DimensionError, MarginError, metric errors, ...
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
