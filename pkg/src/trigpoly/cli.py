"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 property failure, 2 usage,
3 precision too low, 4 I/O failure, 5 inconclusive proof.

TRIGPOLY_DIGITS overrides the default working precision (50 digits).
"""

from __future__ import annotations

import argparse
import math
import os
import random
import sys

from mpmath import mp

from . import approx, bench, coeffs, verify
from .approx import COS_PI_X, SIN_PI_X, DomainError
from .precision import IndexLimitError, PrecisionError, working

EXIT_OK = 0
EXIT_PROPERTY_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_IO = 4
EXIT_INCONCLUSIVE = 5


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _depth_int(text: str) -> int:
    value = _positive_int(text)
    if value < 8:
        raise argparse.ArgumentTypeError(f"max-depth must be >= 8, got {value}")
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("value must be finite")
    return value


def _positive_float(text: str) -> float:
    value = _finite_float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _m_list(text: str) -> tuple[int, ...]:
    try:
        ms = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")
    if not ms or any(m < 1 for m in ms):
        raise argparse.ArgumentTypeError("degrees must be positive integers")
    return ms


def _default_digits() -> int:
    raw = os.environ.get("TRIGPOLY_DIGITS", "50")
    try:
        return int(raw)
    except ValueError:
        raise PrecisionError(f"TRIGPOLY_DIGITS must be an integer, got {raw!r}")


def _func_tag(name: str) -> str:
    return SIN_PI_X if name == "sin" else COS_PI_X


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline="\n"), True


# --- subcommands -----------------------------------------------------------

def cmd_coeffs(args) -> int:
    if args.format == "symbolic":
        for sym in coeffs.coeff_symbolic(args.max_j):
            print(f"t_{sym.index} = {sym.as_string()}")
        return EXIT_OK
    table = coeffs.coefficient_table(args.max_j, args.digits, route=args.route)
    if args.format == "csv":
        print("j,t_j,trunc_bound")
        for entry in table:
            print(f"{entry.j},{entry.value.to_str(args.digits)},{entry.trunc_bound.to_str(3)}")
    else:
        print(f"{'j':>4}  {'t_j':<{args.digits + 8}}  trunc_bound")
        for entry in table:
            print(
                f"{entry.j:>4}  {entry.value.to_str(args.digits):<{args.digits + 8}}  "
                f"{entry.trunc_bound.to_str(3)}"
            )
    return EXIT_OK


def cmd_eval(args) -> int:
    func = _func_tag(args.func)
    poly = approx.build_poly(func, args.m, args.digits)
    value = poly.eval(args.x)
    with working(args.digits):
        ref = mp.cos(mp.pi * args.x) if func == COS_PI_X else mp.sin(mp.pi * args.x)
        err = abs(ref - value)
        print(f"value={value!r}")
        print(f"reference={mp.nstr(ref, min(args.digits, 30))}")
        print(f"error={mp.nstr(err, 6)}")
    lo, hi = (-0.5, 0.5) if func == COS_PI_X else (0.0, 1.0)
    if lo < args.x < hi:
        cert = approx.error_bound(func, args.m, args.x, args.digits)
        print(f"bound={cert.bound!r}")
    else:
        print("note=outside certified domain")
    return EXIT_OK


def cmd_bound(args) -> int:
    cert = approx.error_bound(_func_tag(args.func), args.m, args.x, args.digits)
    print(f"m={cert.m}")
    print(f"leading_term={cert.leading_term!r}")
    print(f"q_m={cert.q_m!r}")
    print(f"tail_factor={cert.tail_factor!r}")
    print(f"bound={cert.bound!r}")
    print(f"domain=({cert.domain[0]},{cert.domain[1]})")
    return EXIT_OK


def cmd_select(args) -> int:
    m = approx.select_degree(_func_tag(args.func), args.tol, args.digits)
    print(f"m={m}")
    return EXIT_OK


def _compare_grid(lo: float, hi: float, n: int, seed) -> list[float]:
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    if seed is not None:
        rng = random.Random(seed)
        h = (hi - lo) / (n - 1)
        for i in range(1, n - 1):
            xs[i] = min(hi, max(lo, xs[i] + (rng.random() - 0.5) * h))
    return xs


def cmd_compare(args) -> int:
    func = _func_tag(args.func)
    is_sin = func == SIN_PI_X
    lo, hi = (0.0, 1.0) if is_sin else (-0.5, 0.5)
    polys = {m: approx.build_poly(func, m, args.digits) for m in args.m_list}
    fam = "Q" if is_sin else "P"
    header = (
        ["x", "reference"]
        + [f"{fam}_{m}" for m in args.m_list]
        + [f"S_{m}" for m in args.m_list]
    )
    xs = _compare_grid(lo, hi, args.grid, args.seed)
    out, close_me = _open_out(args.out)
    try:
        out.write(",".join(header) + "\n")
        with working(args.digits):
            for x in xs:
                ref = float(mp.sin(mp.pi * x)) if is_sin else float(mp.cos(mp.pi * x))
                row = [repr(x), repr(ref)]
                row += [repr(polys[m].eval(x)) for m in args.m_list]
                row += [repr(_maclaurin_for(func, m, x)) for m in args.m_list]
                out.write(",".join(row) + "\n")
    finally:
        if close_me:
            out.close()
    return EXIT_OK


def _maclaurin_for(func: str, m: int, x: float) -> float:
    if func == SIN_PI_X:
        return approx.maclaurin_eval(m, x)
    # cosine comparator: the m-term even partial sum 1 - (pi x)^2/2! + ...
    t = math.pi * x
    term = 1.0
    acc = 1.0
    for j in range(1, m):
        term *= -t * t / ((2 * j - 1) * (2 * j))
        acc += term
    return acc


def cmd_prove_example(args) -> int:
    proof = verify.prove_example_inequality(args.max_depth, args.digits)
    status = "PROVED" if proof.proved else "INCONCLUSIVE"
    print(f"{status} target > 0 on [{proof.domain[0]}, {proof.domain[1]}]")
    print(f"subintervals={len(proof.subintervals)}")
    print(f"min_lower_bound={proof.min_lower_bound!r}")
    print(f"max_depth_used={proof.max_depth_used}")
    if not proof.proved:
        print(f"unresolved={len(proof.unresolved)}")
    if args.emit_curves:
        rows = verify.example_curve(args.grid, args.digits)
        with open(args.emit_curves, "w", encoding="utf-8", newline="\n") as handle:
            handle.write("x,f,f_minus_f4\n")
            for x, f_val, diff in rows:
                handle.write(f"{x!r},{f_val!r},{diff!r}\n")
    return EXIT_OK if proof.proved else EXIT_INCONCLUSIVE


_SUITES = ("all", "coeffs", "bracketing", "bessel", "maclaurin", "taylor")


def run_suite(suite: str, grid: int, digits: int) -> list[verify.PropertyReport]:
    reports = []
    if suite in ("all", "coeffs"):
        reports.append(verify.check_coefficient_bounds(100, digits))
    if suite in ("all", "bracketing"):
        reports.append(verify.check_bracketing(SIN_PI_X, 10, grid, digits))
        reports.append(verify.check_bracketing(COS_PI_X, 10, grid, digits))
    if suite in ("all", "bessel"):
        reports.append(verify.check_bessel_identity(50, digits))
    if suite in ("all", "maclaurin"):
        reports.append(verify.check_maclaurin_interleaving(4, grid, digits))
    if suite in ("all", "taylor"):
        reports.append(verify.check_taylor_exactness(8, digits))
    return reports


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.grid, args.digits)
    for report in reports:
        print(verify.report_line(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(verify.reports_to_json(reports))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_PROPERTY_FAIL


def cmd_bench(args) -> int:
    cfg = bench.BenchConfig(
        grid_size=args.grid,
        m_list=args.m_list,
        repetitions=args.reps,
        digits=args.digits,
    )
    rows = bench.run_bench(cfg)
    out, close_me = _open_out(args.out)
    try:
        out.write(bench.rows_to_csv(rows))
    finally:
        if close_me:
            out.close()
    return EXIT_OK


def build_parser(default_digits: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigpoly",
        description=(
            "Certified polynomial approximants for cos(pi*x) and sin(pi*x) "
            "in the shifted bases 1/4-x^2 and x(1-x)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_digits(p):
        p.add_argument("--digits", type=_positive_int, default=default_digits,
                       help="working precision in significant decimal digits")

    p = sub.add_parser("coeffs", help="generate expansion coefficients")
    p.add_argument("--max-j", type=_positive_int, default=10)
    p.add_argument("--format", choices=("table", "csv", "symbolic"), default="table")
    p.add_argument("--route", choices=("recurrence", "direct", "bessel"),
                   default="recurrence")
    add_digits(p)
    p.set_defaults(handler=cmd_coeffs)

    p = sub.add_parser("eval", help="evaluate an approximant")
    p.add_argument("--func", choices=("sin", "cos"), required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--x", type=_finite_float, required=True)
    add_digits(p)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("bound", help="print the certified error bound at x")
    p.add_argument("--func", choices=("sin", "cos"), required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--x", type=_finite_float, required=True)
    add_digits(p)
    p.set_defaults(handler=cmd_bound)

    p = sub.add_parser("select", help="minimal degree meeting a tolerance")
    p.add_argument("--func", choices=("sin", "cos"), required=True)
    p.add_argument("--tol", type=_positive_float, required=True)
    add_digits(p)
    p.set_defaults(handler=cmd_select)

    p = sub.add_parser("compare", help="CSV of approximants vs Maclaurin sums")
    p.add_argument("--func", choices=("sin", "cos"), required=True)
    p.add_argument("--m-list", type=_m_list, default=(1, 2, 3, 4))
    p.add_argument("--grid", type=_positive_int, default=2048)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--seed", type=int, default=None,
                   help="jitter interior grid points (default: deterministic)")
    add_digits(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("prove-example", help="run the worked positivity proof")
    p.add_argument("--max-depth", type=_depth_int, default=24)
    p.add_argument("--emit-curves", default=None, metavar="PATH")
    p.add_argument("--grid", type=_positive_int, default=2048)
    add_digits(p)
    p.set_defaults(handler=cmd_prove_example)

    p = sub.add_parser("verify", help="run the property-check suites")
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.add_argument("--grid", type=_positive_int, default=2048)
    p.add_argument("--json", default=None, metavar="PATH",
                   help="also write a structured JSON report")
    add_digits(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("bench", help="accuracy/cost benchmark CSV")
    p.add_argument("--grid", type=_positive_int, default=2048)
    p.add_argument("--m-list", type=_m_list, default=(1, 2, 3, 4))
    p.add_argument("--reps", type=_positive_int, default=5)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--seed", type=int, default=None,
                   help="accepted for interface parity; bench grids are deterministic")
    add_digits(p)
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_digits())
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, IndexLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
