"""Command-line interface.

Exit codes: 0 success, 1 numeric failure, 2 usage or input error,
3 I/O error. Data goes to stdout, warnings to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .analysis import (
    CalibrationError,
    Metric,
    ScanGrid,
    benchmark,
    calibrate_metric,
    cost_profile,
    reference_solution,
    reproduce_table1,
    reproduce_table2,
    scan_errors,
)
from .analysis.export import (
    fmt,
    scan_report_json,
    write_error_rows,
    write_table1,
    write_table2,
)
from .analysis.scan import thread_count
from .core import (
    APPROXIMATIONS,
    FlowConditions,
    InputError,
    MethodId,
    NumericError,
    validate_domain,
)
from .literature import Convention, formula_metadata
from .methods import DESCRIPTIONS, compute_friction

EXIT_NUMERIC = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _methods_epilog() -> str:
    lines = ["methods:"]
    for m in MethodId:
        lines.append(f"  {m.cli_name:24s} {DESCRIPTIONS[m]}")
    return "\n".join(lines)


def _method(name: str) -> MethodId:
    try:
        return MethodId.from_name(name)
    except InputError:
        raise argparse.ArgumentTypeError(
            f"unknown method {name!r}; see --help for the list") from None


def _method_or_all(name: str):
    return "all" if name.strip().lower() == "all" else _method(name)


def _approximation(name: str):
    m = _method_or_all(name)
    if m != "all" and m.is_oracle:
        raise argparse.ArgumentTypeError(f"{name!r} is a reference solver, not an approximation")
    return m


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _convention(text: str) -> Convention:
    try:
        return Convention(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"convention must be 'printed' or 'classical', got {text!r}") from None


def _metric_arg(text: str):
    if text == "auto":
        return None
    try:
        return Metric(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"metric must be auto, f or u, got {text!r}") from None


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _open_out(path: str):
    try:
        return open(path, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _table(rows: list[tuple], header: tuple) -> str:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    out = []
    for k, r in enumerate(cells):
        out.append("  ".join(c.rjust(w) if k and _numeric(c) else c.ljust(w)
                             for c, w in zip(r, widths)).rstrip())
        if k == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def _numeric(text: str) -> bool:
    try:
        float(text)
        return True
    except ValueError:
        return False


def _g(v, digits=6) -> str:
    return "nan" if v != v else f"{v:.{digits}g}"


# ---------------------------------------------------------------- commands


def cmd_friction(args) -> int:
    cond = FlowConditions(args.re, args.eps)
    status = validate_domain(cond)
    for v in status.violations:
        _warn(f"outside the Colebrook domain: {v}")
    options = {}
    if args.method is MethodId.EQ4:
        options = {"a": args.a, "variant": args.variant}
    res = compute_friction(args.method, cond, args.convention, **options)
    data = {
        "method": args.method.cli_name,
        "reynolds": cond.reynolds,
        "relative_roughness": cond.relative_roughness,
        "f": res.friction_factor,
        "u": res.inverse_sqrt,
        "inside_domain": status.inside_colebrook_domain,
    }
    if args.format == "json":
        print(json.dumps(data))
    else:
        for k, v in data.items():
            print(f"{k}={fmt(v) if not isinstance(v, str) else v}")
    return 0


def _scan_csv_path(base: str, method: MethodId, many: bool) -> str:
    if not many:
        return base
    p = Path(base)
    return str(p.with_name(f"{p.stem}.{method.cli_name}{p.suffix or '.csv'}"))


def cmd_scan(args) -> int:
    grid = ScanGrid(args.n_r, args.n_eps)
    methods = list(APPROXIMATIONS) if args.method == "all" else [args.method]
    u_ref = reference_solution(grid)
    calibration = None
    metric = args.metric
    if metric is None:
        calibration = calibrate_metric(grid, reference=u_ref)
        if calibration.ok:
            metric = calibration.metric
        else:
            metric = Metric.ERROR_ON_F
            _warn("metric calibration failed on this grid ("
                  + ", ".join(f"{m.value}={v:.4g}%" for m, v in calibration.values.items())
                  + "); falling back to error on f")
    reports = []
    for m in methods:
        rep = scan_errors(m, grid, metric, args.convention, reference=u_ref)
        reports.append(rep)
        arg = rep.argmax
        print(f"method={m.cli_name} convention={args.convention.value} metric={metric.value} "
              f"max_error_percent={fmt(rep.max_error)} "
              f"p50={_g(rep.percentiles[50])} p90={_g(rep.percentiles[90])} "
              f"p99={_g(rep.percentiles[99])} "
              f"argmax_re={fmt(arg.reynolds) if arg else 'nan'} "
              f"argmax_eps={fmt(arg.relative_roughness) if arg else 'nan'} "
              f"faults={rep.n_faults}")
        if rep.n_faults:
            _warn(f"{m.cli_name}: {rep.n_faults} grid points could not be evaluated")
        if args.out_csv:
            with _open_out(_scan_csv_path(args.out_csv, m, len(methods) > 1)) as fh:
                write_error_rows(rep, fh)
    if args.out_json:
        with _open_out(args.out_json) as fh:
            fh.write(scan_report_json(metric.value, grid.n_r, grid.n_eps, reports,
                                      calibration.header() if calibration else None))
    return 0


def cmd_table1(args) -> int:
    cells = reproduce_table1()
    rows = []
    for c in cells:
        rows.append((f"{c.relative_roughness:g}", f"{c.reynolds:g}", _g(c.x, 10),
                     str(c.naive_w) if c.overflow else _g(c.naive_w, 10),
                     _g(c.omega, 10), _g(c.y, 10),
                     "-" if c.published_w is None else _g(c.published_w, 10),
                     _g(c.published_y, 10),
                     "yes" if c.published_consistent else "NO"))
    print(_table(rows, ("eps", "R", "x", "naive_W(e^x)", "omega", "y",
                        "published_W", "published_y", "W~y")))
    n_over = sum(c.overflow for c in cells)
    print(f"overflow cells: {n_over}")
    if args.csv:
        with _open_out(args.csv) as fh:
            write_table1(cells, fh)
    return 0


def cmd_table2(args) -> int:
    grid = ScanGrid(args.n_r, args.n_eps)
    table = reproduce_table2(grid, args.metric)
    cal = table.calibration
    print(f"metric={table.metric.value} grid={grid.n_r}x{grid.n_eps} "
          + " ".join(f"eq6_max_{m.value}={fmt(v)}" for m, v in cal.values.items()))
    rows = [(r.name, _g(r.measured_max_percent, 5), _g(r.quoted_max_percent, 4),
             f"{_g(r.band[0], 4)}..{_g(r.band[1], 4)}", r.log_count, r.power_count,
             r.total, r.total_clamond, r.n_faults, "pass" if r.passed else "FAIL")
            for r in table.rows]
    print(_table(rows, ("method", "measured_%", "quoted_%", "band_%", "logs",
                        "powers", "total", "clamond", "faults", "result")))
    if args.csv:
        with _open_out(args.csv) as fh:
            write_table2(table, fh)
    return 0


def cmd_bench(args) -> int:
    grid = ScanGrid(args.n_r, args.n_eps)
    methods = list(MethodId) if args.method == "all" else [args.method]
    rows = []
    for m in methods:
        rep = benchmark(m, grid, args.repetitions, args.mode, args.convention)
        rows.append((m.cli_name, rep.mode, rep.calls, _g(rep.p10, 4),
                     _g(rep.median_ns_per_call, 4), _g(rep.p90, 4)))
    print(_table(rows, ("method", "mode", "calls", "p10_ns", "median_ns", "p90_ns")))
    if args.csv:
        with _open_out(args.csv) as fh:
            fh.write("method,mode,calls,p10_ns,median_ns,p90_ns\n")
            for r in rows:
                fh.write(",".join(str(c) for c in r) + "\n")
    return 0


def cmd_cost(args) -> int:
    methods = list(APPROXIMATIONS) if args.method == "all" else [args.method]
    rows = []
    for m in methods:
        prof = cost_profile(m, args.convention)
        meta = formula_metadata(m)
        c = prof.counts
        rows.append((m.cli_name, c["addition"], c["subtraction"], c["multiplication"],
                     c["division"], c["square_root"], c["natural_log"], c["log10"],
                     c["fractional_exponential"], f"{prof.weighted_cost:.2f}",
                     f"{meta.log_count}/{meta.noninteger_power_count}",
                     f"{meta.total_expensive}({meta.total_expensive_clamond})"))
    print(_table(rows, ("method", "add", "sub", "mul", "div", "sqrt", "ln", "log10",
                        "frac_exp", "weighted", "published_logs/powers",
                        "published_total")))
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    epilog = _methods_epilog()
    fmt_cls = argparse.RawDescriptionHelpFormatter
    parser = argparse.ArgumentParser(
        prog="frictionlab",
        description="Colebrook friction factor: explicit approximations, "
                    "reference solutions, accuracy and cost tables.",
        epilog=epilog, formatter_class=fmt_cls)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, description=help_text,
                              epilog=epilog, formatter_class=fmt_cls)

    def add_convention(p, default):
        p.add_argument("--convention", type=_convention, default=default,
                       metavar="{printed,classical}",
                       help="transcription of the literature formulas "
                            f"(default: {default.value})")

    def add_grid(p, n):
        p.add_argument("--n-r", type=_positive_int, default=n,
                       help=f"Reynolds samples (default: {n})")
        p.add_argument("--n-eps", type=_positive_int, default=n,
                       help=f"roughness samples incl. eps=0 (default: {n})")

    p = add("friction", "friction factor for one (R, eps) pair")
    p.add_argument("--re", type=float, required=True, help="Reynolds number")
    p.add_argument("--eps", type=float, default=0.0, help="relative roughness (default: 0)")
    p.add_argument("--method", type=_method, default=MethodId.ORACLE_FIXED_POINT,
                   help="method name (default: oracle)")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--a", type=float, default=1e6, help="eq4 power parameter (default: 1e6)")
    p.add_argument("--variant", choices=("A.2.1", "A.2.2", "A.2.3"), default="A.2.1",
                   help="eq4 bracket structure (default: A.2.1)")
    add_convention(p, Convention.AS_PRINTED)
    p.set_defaults(func=cmd_friction)

    p = add("scan", "relative error of one or all methods over a grid")
    p.add_argument("--method", type=_approximation, required=True,
                   help="method name or 'all'")
    add_grid(p, 512)
    p.add_argument("--metric", type=_metric_arg, default=None, metavar="{auto,f,u}",
                   help="error on f, on 1/sqrt(f), or calibrated (default: auto)")
    add_convention(p, Convention.AS_PRINTED)
    p.add_argument("--out-csv", help="per-point CSV (one file per method for 'all')")
    p.add_argument("--out-json", help="summary JSON report")
    p.set_defaults(func=cmd_scan)

    p = add("table1", "W(e^x) vs Wright omega vs series, with overflow cells")
    p.add_argument("--csv", help="also write CSV here")
    p.set_defaults(func=cmd_table1)

    p = add("table2", "measured vs published max error and function counts")
    add_grid(p, 512)
    p.add_argument("--metric", type=_metric_arg, default=None, metavar="{auto,f,u}",
                   help="error metric (default: auto, calibrated on eq6)")
    p.add_argument("--csv", help="also write CSV here")
    p.set_defaults(func=cmd_table2)

    p = add("bench", "wall-clock timing per method (informational)")
    p.add_argument("--method", type=_method_or_all, default="all",
                   help="method name or 'all' (default: all)")
    add_grid(p, 64)
    p.add_argument("--repetitions", type=int, default=20, help="(>= 10, default: 20)")
    p.add_argument("--mode", choices=("vector", "scalar"), default="vector")
    add_convention(p, Convention.CLASSICAL)
    p.add_argument("--csv", help="also write CSV here")
    p.set_defaults(func=cmd_bench)

    p = add("cost", "operation counts and weighted cost per method")
    p.add_argument("--method", type=_approximation, default="all",
                   help="method name or 'all' (default: all)")
    add_convention(p, Convention.CLASSICAL)
    p.set_defaults(func=cmd_cost)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        thread_count()
        if getattr(args, "repetitions", 10) < 10:
            parser.error("--repetitions must be >= 10")
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericError, CalibrationError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
