"""Command-line front end: eval, check, complement, iterate, counterexample.

Conventions: bulk data (CSV) goes to stdout, diagnostics to stderr, and
``--json`` switches reports to a single JSON object on stdout.  Exit
status is 0 for success or a passing check, 1 for a failing check, and 2
for usage, parse, or parameter errors.  Scan seeds default to 0 and are
echoed in every report header so runs can be replayed.  Floating-point
values print with 17 significant digits; non-finite values appear as
strings in JSON output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .complement import general_pair, xy_pair
from .errors import MeansError, ParameterError
from .iterate import iterate_pair
from .multivar import counterexample_ratio
from .projective import builtin_cone
from .specs import parse_mean, parse_pair
from .verify import (
    ScanConfig,
    check_flags,
    check_invariance,
    check_meanness,
    check_monotone_trace,
    check_trace_meanness,
)

__all__ = ["main"]


def _fmt(value) -> str:
    return f"{float(value):.17g}"


def _jsonify(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return obj


def _print_json(payload) -> None:
    print(json.dumps(_jsonify(payload)))


def _scan_config(args) -> ScanConfig:
    pieces = args.grid.split(":")
    if len(pieces) != 3:
        raise ParameterError(f"--grid must look like lo:hi:n, got {args.grid!r}")
    try:
        lo, hi, n = float(pieces[0]), float(pieces[1]), int(pieces[2])
    except ValueError:
        raise ParameterError(
            f"--grid must look like lo:hi:n, got {args.grid!r}"
        ) from None
    return ScanConfig(domain=(lo, hi), points_per_axis=n,
                      rel_tol=args.tol, seed=args.seed)


def _cmd_eval(args) -> int:
    F = parse_mean(args.mean)
    value = F(args.x, args.y)
    if args.json:
        _print_json({"mean": args.mean, "x": args.x, "y": args.y, "value": value})
    else:
        print(_fmt(value))
    return 0


_CHECKS = {
    "mean": check_meanness,
    "trace": check_trace_meanness,
    "monotone": check_monotone_trace,
    "flags": check_flags,
}


def _cmd_check(args) -> int:
    cfg = _scan_config(args)
    if args.what == "invariance":
        if not args.pair:
            print("error: --what invariance requires --pair", file=sys.stderr)
            return 2
        subject = args.pair
        report = check_invariance(parse_pair(subject), cfg)
    else:
        if not args.mean:
            print(f"error: --what {args.what} requires --mean", file=sys.stderr)
            return 2
        subject = args.mean
        report = _CHECKS[args.what](parse_mean(subject), cfg)
    if args.json:
        payload = {"check": args.what, "subject": subject}
        payload.update(report.to_dict())
        payload.update({"seed": cfg.seed, "tol": cfg.rel_tol, "grid": args.grid})
        _print_json(payload)
    else:
        print(f"# check={args.what} subject={subject} seed={cfg.seed} "
              f"tol={_fmt(cfg.rel_tol)} grid={args.grid}")
        witness = ",".join(_fmt(w) for w in report.witness)
        line = (f"{'pass' if report.passed else 'FAIL'} "
                f"worst_violation={_fmt(report.worst_violation)} "
                f"witness={witness} samples={report.samples_checked}")
        if report.detail:
            line += f" detail={report.detail!r}"
        print(line)
    return 0 if report.passed else 1


def _pair_rows(pair, xs, ys):
    with np.errstate(all="ignore"):
        kv = np.asarray(pair.K.fn(xs, ys), dtype=float)
        lv = np.asarray(pair.L.fn(xs, ys), dtype=float)
        inner = np.asarray(pair.target.fn(kv, lv), dtype=float)
        outer = np.asarray(pair.target.fn(xs, ys), dtype=float)
        residual = np.abs(inner - outer) / outer
    return np.column_stack([xs, ys, kv, lv, inner, outer, residual])


_PAIR_COLUMNS = "x,y,K,L,M_of_KL,M_of_xy,residual"


def _cmd_complement(args) -> int:
    cfg = _scan_config(args)
    M = parse_mean(args.mean)
    have_cd = args.c is not None or args.d is not None
    if have_cd and args.cone is not None:
        print("error: --c/--d and --cone are mutually exclusive", file=sys.stderr)
        return 2
    if (args.c is None) != (args.d is None):
        print("error: --c and --d must be given together", file=sys.stderr)
        return 2
    if have_cd:
        C = parse_mean(args.c)
        D = parse_mean(args.d)
        pair = general_pair(M, C, D, args.t)
        description = (f"K = C^t*M/M(C^t,D^t), L = D^t*M/M(C^t,D^t); "
                       f"M={M.label}, C={C.label}, D={D.label}, t={args.t!r}")
    else:
        cone = builtin_cone(args.cone or "full")
        pair = xy_pair(M, args.t, cone)
        description = (f"K = P^t*M/M(x^t,y^t) with P selecting x on "
                       f"{cone.name!r}, L on its complement; "
                       f"M={M.label}, t={args.t!r}")
    lo, hi = cfg.domain
    n = cfg.points_per_axis if args.emit == "csv" else 5
    axis = np.geomspace(lo, hi, n)
    gx, gy = np.meshgrid(axis, axis)
    rows = _pair_rows(pair, gx.ravel(), gy.ravel())
    header = (f"# complement pair={pair.spec or '<no spec>'} seed={cfg.seed} "
              f"grid={args.grid}")
    if args.json:
        _print_json({
            "pair_spec": pair.spec,
            "description": description,
            "K": pair.K.label,
            "L": pair.L.label,
            "target": pair.target.label,
            "t": pair.t,
            "seed": cfg.seed,
            "grid": args.grid,
            "columns": _PAIR_COLUMNS.split(","),
            "rows": rows.tolist(),
        })
        return 0
    if args.emit == "csv":
        print(header, file=sys.stderr)
        print(f"# {description}", file=sys.stderr)
        print(_PAIR_COLUMNS)
        for row in rows:
            print(",".join(_fmt(v) for v in row))
    else:
        print(header)
        print(f"# {description}")
        print("# columns: " + _PAIR_COLUMNS.replace(",", " "))
        for row in rows:
            print(" ".join(_fmt(v) for v in row))
    return 0


def _cmd_iterate(args) -> int:
    pair = parse_pair(args.pair)
    trace = iterate_pair(pair, args.x0, args.y0,
                         rel_stop=args.rel_stop, max_iter=args.max_iter)
    xs = trace.iterates[:, 0]
    ys = trace.iterates[:, 1]
    with np.errstate(all="ignore"):
        values = np.asarray(pair.target.fn(xs, ys), dtype=float)
    gaps = trace.gaps
    summary = (f"converged={str(trace.converged).lower()} "
               f"iterations={trace.iterations} limit={_fmt(trace.limit)} "
               f"final_gap={_fmt(trace.final_gap)}")
    if args.json:
        _print_json({
            "pair": args.pair,
            "converged": trace.converged,
            "iterations": trace.iterations,
            "limit": trace.limit,
            "final_gap": trace.final_gap,
            "gap_monotone": trace.gap_monotone,
            "columns": ["n", "x", "y", "gap", "M_of_xy"],
            "rows": [[int(i), xs[i], ys[i], gaps[i], values[i]]
                     for i in range(len(xs))],
        })
        return 0
    header = f"# iterate pair={args.pair} x0={_fmt(args.x0)} y0={_fmt(args.y0)}"
    if args.emit == "csv":
        print(header, file=sys.stderr)
        print("n,x,y,gap,M_of_xy")
        for i in range(len(xs)):
            print(f"{i}," + ",".join(_fmt(v) for v in
                                     (xs[i], ys[i], gaps[i], values[i])))
        print(summary, file=sys.stderr)
    else:
        print(header)
        print("# columns: n x y gap M_of_xy")
        for i in range(len(xs)):
            print(f"{i} " + " ".join(_fmt(v) for v in
                                     (xs[i], ys[i], gaps[i], values[i])))
        print("# " + summary)
    return 0


def _cmd_counterexample(args) -> int:
    ratio = counterexample_ratio(args.n, args.t, args.x)
    limit = float(args.n - 1)
    if args.json:
        _print_json({"n": args.n, "t": args.t, "x": args.x,
                     "ratio": ratio, "limit": limit})
    else:
        print(f"ratio={_fmt(ratio)}")
        print(f"limit={_fmt(limit)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", default="1e-6:1e6:64", metavar="LO:HI:N",
                        help="scan domain and grid resolution (default %(default)s)")
    common.add_argument("--tol", type=float, default=1e-11,
                        help="relative tolerance for checks (default %(default)g)")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for random sample supplements (default %(default)s)")
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report instead of text")

    parser = argparse.ArgumentParser(
        prog="invmeans",
        description="Construct and verify complementary mean pairs solving "
                    "M(K, L) = M.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a mean expression at one point")
    p.add_argument("--mean", required=True, help="mean expression")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("check", parents=[common],
                       help="run a verification scan")
    p.add_argument("--what", required=True,
                   choices=["mean", "trace", "monotone", "invariance", "flags"])
    p.add_argument("--mean", help="mean expression (all checks except invariance)")
    p.add_argument("--pair", help="pair expression (invariance check)")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("complement", parents=[common],
                       help="build a complementary pair and tabulate it")
    p.add_argument("--mean", required=True, help="target mean expression")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--c", help="first component mean (with --d)")
    p.add_argument("--d", help="second component mean (with --c)")
    p.add_argument("--cone", help="selection set name (without --c/--d; "
                                  "default full)")
    p.add_argument("--emit", choices=["table", "csv"], default="table")
    p.set_defaults(handler=_cmd_complement)

    p = sub.add_parser("iterate", parents=[common],
                       help="iterate a pair to its invariant-mean limit")
    p.add_argument("--pair", required=True, help="pair expression")
    p.add_argument("--x0", type=float, required=True)
    p.add_argument("--y0", type=float, required=True)
    p.add_argument("--rel-stop", type=float, default=1e-14)
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--emit", choices=["table", "csv"], default="table")
    p.set_defaults(handler=_cmd_iterate)

    p = sub.add_parser("counterexample", parents=[common],
                       help="escape ratio of the n-variable construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(handler=_cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.handler(args)
    except (MeansError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
