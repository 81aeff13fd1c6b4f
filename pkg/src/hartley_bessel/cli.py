"""Command-line front end.

Subcommands::

    hartley-bessel transform --alpha 1 gaussian:1 --out spec.csv
    hartley-bessel certify --suite young --trials 200 --out report.csv
    hartley-bessel solve gaussian:0.05 gaussian:1 --out report.json

Function specs use the mini-grammar ``family:param[,param...]``
(e.g. ``gaussian:1.5``, ``hermite_gaussian:3``,
``random_bandlimited:42,8``) or ``@path.csv`` for a sampled-function file.
Exit codes: 0 success, 2 config error, 3 input parse error,
4 series non-convergence, 5 certification failure, 6 not solvable.
"""

import argparse
import sys

from .convolution import check_banach_l1, check_young
from .errors import (
    GridMismatch,
    InvalidConfig,
    InvalidExponent,
    NonConvergence,
)
from .inequalities import ExponentTriple
from .quadrature import build_grid, make_test_function
from .serialize import (
    format_report_csv,
    format_report_json,
    format_sampled,
    format_solver_report_json,
    read_sampled,
)
from .solver import solve_integral_equation
from .special import KernelParams
from .transform import build_plan, check_hausdorff_young, forward_transform

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INPUT = 3
EXIT_NONCONVERGENCE = 4
EXIT_CERTIFY_FAIL = 5
EXIT_NOT_SOLVABLE = 6

HAUSDORFF_YOUNG_EXPONENTS = (1.0, 1.25, 1.5, 2.0)
YOUNG_TRIPLES = ((2.0, 2.0, 1.0), (2.0, 1.0, 2.0), (1.0, 2.0, 2.0),
                 (1.5, 1.5, 1.5))


def _add_common(parser):
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--radius", type=float, default=12.0)
    parser.add_argument("--panels", type=int, default=400)
    parser.add_argument("--points", type=int, default=3)
    parser.add_argument("--scheme", choices=("gauss_legendre", "trapezoid"),
                        default="gauss_legendre")
    parser.add_argument("--seed", type=int, default=12345)
    parser.add_argument("--jobs", type=int, default=1,
                        help="upper bound on trial parallelism (trials are "
                             "cheap matrix products; execution is sequential)")
    parser.add_argument("--tol-round-trip", type=float, default=1e-5)
    parser.add_argument("--tol-inequality", type=float, default=1e-6)
    parser.add_argument("--tol-young", type=float, default=1e-4)
    parser.add_argument("--tol-residual", type=float, default=1e-6)
    parser.add_argument("--tol-denom-threshold", type=float, default=1e-6)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None,
                        help="output path (stdout when omitted)")


def _validate_common(args):
    for name in ("tol_round_trip", "tol_inequality", "tol_young",
                 "tol_residual", "tol_denom_threshold"):
        if getattr(args, name) <= 0:
            raise InvalidConfig(f"--{name.replace('_', '-')} must be positive")
    if args.seed < 0:
        raise InvalidConfig("--seed must be nonnegative")
    if args.jobs < 1:
        raise InvalidConfig("--jobs must be >= 1")


def _build(args):
    grid = build_grid(args.alpha, args.radius, args.panels, args.points,
                      scheme=args.scheme)
    plan = build_plan(grid, KernelParams(alpha=args.alpha))
    return grid, plan


def _parse_function_spec(spec, grid):
    if spec.startswith("@"):
        fn, _header = read_sampled(spec[1:], grid)
        return fn
    if ":" not in spec:
        raise InvalidConfig(
            f"function spec {spec!r} must be family:params or @path.csv"
        )
    family, _, raw = spec.partition(":")
    try:
        params = [float(tok) for tok in raw.split(",")] if raw else []
    except ValueError as exc:
        raise InvalidConfig(f"bad numeric parameter in spec {spec!r}") from exc
    return make_test_function(family, params, grid)


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_transform(args):
    grid, plan = _build(args)
    try:
        fn = _parse_function_spec(args.input, grid)
    except (InvalidConfig, GridMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    spectral = forward_transform(plan, fn)
    if args.format == "csv":
        _emit(format_sampled(spectral, kind="spectral"), args.out)
    else:
        import json

        doc = {
            "kind": "spectral",
            "alpha": grid.alpha,
            "radius": grid.radius,
            "scheme": grid.scheme,
            "nodes": list(map(float, grid.nodes)),
            "values": list(map(float, spectral.values)),
        }
        _emit(json.dumps(doc, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def _seeded_function(grid, seed, bands=6):
    return make_test_function("random_bandlimited", [seed, bands], grid), (
        f"random_bandlimited:{seed},{bands}"
    )


def run_certification(args):
    """Run a seeded certification sweep; returns the report rows."""
    grid, plan = _build(args)
    rows = []
    for i in range(args.trials):
        f, fid = _seeded_function(grid, args.seed + 2 * i)
        g, gid = _seeded_function(grid, args.seed + 2 * i + 1)
        if args.suite == "hausdorff_young":
            for p in HAUSDORFF_YOUNG_EXPONENTS:
                rows.append(
                    check_hausdorff_young(plan, f, p, tol=args.tol_inequality,
                                          witness_ids=(fid,))
                )
        elif args.suite == "young":
            for p, q, r in YOUNG_TRIPLES:
                rows.append(
                    check_young(plan, f, g, ExponentTriple(p, q, r),
                                tol=args.tol_young, witness_ids=(fid, gid))
                )
        else:  # banach_l1
            rows.append(
                check_banach_l1(plan, f, g, tol=args.tol_young,
                                witness_ids=(fid, gid))
            )
    return rows


def cmd_certify(args):
    if args.trials < 1:
        raise InvalidConfig("--trials must be >= 1")
    rows = run_certification(args)
    metadata = {
        "suite": args.suite,
        "trials": args.trials,
        "alpha": args.alpha,
        "radius": args.radius,
        "panels": args.panels,
        "points": args.points,
        "scheme": args.scheme,
        "seed": args.seed,
        "tolerances": {
            "inequality": args.tol_inequality,
            "young": args.tol_young,
        },
    }
    if args.format == "csv":
        _emit(format_report_csv(rows), args.out)
        if args.out is not None:
            _emit(format_report_json(rows, metadata), args.out + ".json")
    else:
        _emit(format_report_json(rows, metadata), args.out)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_CERTIFY_FAIL


def cmd_solve(args):
    grid, plan = _build(args)
    try:
        g = _parse_function_spec(args.g_spec, grid)
        h = _parse_function_spec(args.h_spec, grid)
    except (InvalidConfig, GridMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = solve_integral_equation(plan, g, h,
                                     denom_threshold=args.tol_denom_threshold)
    metadata = {
        "alpha": args.alpha,
        "radius": args.radius,
        "panels": args.panels,
        "points": args.points,
        "scheme": args.scheme,
        "g_spec": args.g_spec,
        "h_spec": args.h_spec,
        "tol_residual": args.tol_residual,
    }
    _emit(format_solver_report_json(report, metadata), args.out)
    if args.dump_solution and report.solvable:
        from .serialize import write_sampled

        write_sampled(args.dump_solution, report.solution_f)
    if not report.solvable:
        return EXIT_NOT_SOLVABLE
    return EXIT_OK if report.residual_l1 <= args.tol_residual else (
        EXIT_CERTIFY_FAIL
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hartley-bessel",
        description="Hartley-Bessel transform toolkit: transforms, "
                    "inequality certification, and convolution integral "
                    "equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transform", help="transform a function to the "
                                            "frequency grid")
    p_tr.add_argument("input", help="function spec or @path.csv")
    _add_common(p_tr)
    p_tr.set_defaults(func=cmd_transform)

    p_cert = sub.add_parser("certify", help="run an inequality "
                                            "certification sweep")
    p_cert.add_argument("--suite", required=True,
                        choices=("hausdorff_young", "young", "banach_l1"))
    p_cert.add_argument("--trials", type=int, default=200)
    _add_common(p_cert)
    p_cert.set_defaults(func=cmd_certify)

    p_solve = sub.add_parser("solve", help="solve f + f*g = g*h")
    p_solve.add_argument("g_spec", help="function spec for g")
    p_solve.add_argument("h_spec", help="function spec for h")
    p_solve.add_argument("--dump-solution", default=None,
                         help="also write the solution as sampled CSV")
    _add_common(p_solve)
    p_solve.set_defaults(func=cmd_solve)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_common(args)
        return args.func(args)
    except (InvalidConfig, InvalidExponent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except GridMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
