"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard exceeded.
"""

import argparse
import json
import sys

from . import enumeration as en, genfun as gf, ideal, verify
from .draw import draw
from .enumeration import GuardExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def compute_w(d, n, method, guard=en.DEFAULT_GUARD):
    if method == "enum":
        return en.w_enum(d, n, guard)
    if method == "recursion":
        if d != 2:
            raise UsageError("the recursion method is only available for d = 2")
        return gf.w_recursion(n)[n]
    if method == "fixedpoint":
        return gf.w_fixedpoint(d, n)[n]
    if method == "closed":
        return gf.w_closed(n) if d == 2 else gf.w_closed_d(d, n)
    raise UsageError(f"unknown method {method!r}")


def _emit(text, out):
    out.write(text if text.endswith("\n") else text + "\n")


def cmd_wn(args, out):
    w = compute_w(args.d, args.n, args.method, args.guard)
    if args.format == "json":
        _emit(json.dumps(w.to_json()), out)
    elif args.format == "csv":
        _emit("j,coefficient\n" + "".join(f"{j},{c}\n" for j, c in w.items()), out)
    else:
        _emit(str(w), out)
    return EXIT_OK


def cmd_enum(args, out):
    trees = en.enum_trees(args.d, args.n, args.guard)
    rows = []
    for i, tree in enumerate(trees):
        if args.limit is not None and i >= args.limit:
            break
        s = en.colour_stats(tree)
        row = {"index": i, "tree": tree.bracket(), "n_b": s.n_b, "n_w": s.n_w}
        if args.d == 2:
            row.update(e_b=s.e_b, e_w=s.e_w, word=en.boundary_word(tree))
        rows.append(row)
    if args.format == "json":
        _emit(json.dumps(rows), out)
    elif args.format == "csv":
        keys = list(rows[0]) if rows else ["index", "tree"]
        _emit(",".join(keys) + "\n" + "".join(",".join(str(r[k]) for k in keys) + "\n" for r in rows), out)
    else:
        for r in rows:
            _emit("  ".join(f"{k}={v}" for k, v in r.items()), out)
    return EXIT_OK


def cmd_verify(args, out):
    params = verify.VerifyParams(d_max=args.d_max, n_max=args.n_max, order=args.order,
                                 long_run=args.long, guard=args.guard)
    report = verify.run_suite(args.suite, params)
    if args.format == "json":
        _emit(json.dumps(report.to_json(timing=args.timing), indent=1, sort_keys=True), out)
    else:
        _emit(report.to_text(), out)
    if args.timing:
        sys.stderr.write(f"elapsed {report.elapsed:.2f}s\n")
    return report.exit_code


def cmd_draw(args, out):
    total = gf.t_dn(args.d, args.n)
    if not 0 <= args.index < total:
        raise UsageError(f"index {args.index} out of range: t_{{{args.d},{args.n}}} = {total}")
    svg = draw(args.d, args.n, args.index, args.output, guard=args.guard)
    if args.output is None:
        _emit(svg, out)
    return EXIT_OK


def cmd_export(args, out):
    if args.what == "table":
        if args.method == "enum":
            polys = [en.w_enum(args.d, n, args.guard) for n in range(args.n_max + 1)]
            data = gf.WeightTable(args.d, polys, "enum")
        elif args.method == "recursion":
            if args.d != 2:
                raise UsageError("the recursion method is only available for d = 2")
            data = gf.w_recursion(args.n_max)
        elif args.method == "fixedpoint":
            data = gf.w_fixedpoint(args.d, args.n_max)
        else:
            data = gf.closed_table(args.d, args.n_max)
        text = json.dumps(data.to_json())
    else:
        _, cert = ideal.ideal_certificate(args.d, long_run=args.long)
        if cert is None:
            raise ArithmeticError("no certificate: elimination did not end in a multiple of P")
        text = json.dumps(cert.to_json())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        _emit(text, out)
    return EXIT_OK


def cmd_array(args, out):
    table = gf.closed_table(2, 3 * args.rows)
    A = gf.build_array(table, args.rows)
    if args.format == "csv":
        text = A.to_csv()
    elif args.format == "json":
        text = json.dumps([[str(v) for v in row] for row in A.rows])
    else:
        width = max(len(str(v)) for row in A.rows for v in row)
        text = "\n".join(" ".join(str(v).rjust(width) for v in row) for row in A.rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        _emit(text, out)
    return EXIT_OK


def series_values(name, order):
    """Integer coefficient list of a named one-variable series through ``x**order``."""
    if name in ("R", "C"):
        R, C, _ = gf.row_col_series(order, gf.closed_table(2, 3 * order + 1))
        return (R if name == "R" else C).at_t_one()
    if name in ("A", "B"):
        A, B = gf.extremal_AB(order)
        return (A if name == "A" else B).at_t_one()
    if name == "wprime":
        return gf.wprime_series(order).series.at_t_one()
    if name == "fair":
        return [gf.fair_formula(2, n) for n in range(order + 1)]
    if name == "catalan":
        return [gf.t_dn(2, n) for n in range(order + 1)]
    raise UsageError(f"unknown series {name!r}")


SERIES_NAMES = ("R", "C", "A", "B", "wprime", "fair", "catalan")


def cmd_series(args, out):
    vals = series_values(args.name, args.order)
    if args.format == "json":
        _emit(json.dumps([str(v) for v in vals]), out)
    elif args.format == "csv":
        _emit("n,coefficient\n" + "".join(f"{n},{v}\n" for n, v in enumerate(vals)), out)
    else:
        _emit(", ".join(str(v) for v in vals), out)
    return EXIT_OK


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _dval(text):
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("d must be >= 2")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--guard", type=int, default=en.DEFAULT_GUARD,
                        help="largest number of trees (or search nodes) an enumeration may visit")
    p = argparse.ArgumentParser(prog="checkerboard", description="Checkerboard dissections: weights and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("wn", parents=[common], help="weight polynomial w_{d,n}")
    s.add_argument("--d", type=_dval, default=2)
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--method", choices=gf.METHODS, default="closed")
    s.add_argument("--format", choices=("human", "json", "csv"), default="human")
    s.set_defaults(func=cmd_wn)

    s = sub.add_parser("enum", parents=[common], help="list dissections in canonical order")
    s.add_argument("--d", type=_dval, default=2)
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--limit", type=_nonneg)
    s.add_argument("--format", choices=("human", "json", "csv"), default="human")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=verify.SUITES, default="all")
    s.add_argument("--d-max", type=_dval)
    s.add_argument("--n-max", type=_nonneg)
    s.add_argument("--order", type=_nonneg)
    s.add_argument("--long", action="store_true", help="allow long-running ideal certificates (d <= 6)")
    s.add_argument("--format", choices=("human", "json"), default="human")
    s.add_argument("--timing", action="store_true", help="include timings (stderr and JSON)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("draw", parents=[common], help="SVG of one dissection")
    s.add_argument("--d", type=_dval, default=2)
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--index", type=_nonneg, default=0)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_draw)

    s = sub.add_parser("export", parents=[common], help="weight table or ideal certificate as JSON")
    s.add_argument("what", choices=("table", "certificate"))
    s.add_argument("--d", type=_dval, default=2)
    s.add_argument("--n-max", type=_nonneg, default=20)
    s.add_argument("--method", choices=gf.METHODS, default="closed")
    s.add_argument("--long", action="store_true")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("array", parents=[common], help="antidiagonal coefficient array")
    s.add_argument("--rows", type=_nonneg, default=6)
    s.add_argument("--format", choices=("human", "csv", "json"), default="human")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_array)

    s = sub.add_parser("series", parents=[common], help="coefficients of a one-variable series")
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--order", type=_nonneg, default=10)
    s.add_argument("--format", choices=("human", "json", "csv"), default="human")
    s.set_defaults(func=cmd_series)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except GuardExceeded as exc:
        sys.stderr.write(f"guard exceeded: {exc}\n")
        return EXIT_GUARD
    except (UsageError, IndexError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
