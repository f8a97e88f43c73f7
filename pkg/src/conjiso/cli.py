"""Command-line front end: ``python -m conjiso <command> ...``.

Exit codes:
  0  success (every asserted check passed, all methods agreed)
  1  an asserted check failed or boundary methods disagreed
  2  usage error (unknown subcommand, bad flags)
  3  malformed cycle-type string
  4  n, k, p or i out of range
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import factorial

from .bounds import solve_K, solve_kappa
from .characters import character_table
from .combinatorics import partitions_of
from .optimizer import xi_min, xi_profile
from .report import to_jsonable
from .sets import (
    ConjClassSet,
    appendix_bound,
    appendix_t,
    boundary_bruteforce,
    boundary_via_classes,
    explicit_union,
    lex_segment_boundary,
)
from .spectral import eigenvalue_table, spectral_boundary
from .suites import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE, EXIT_RANGE = 0, 1, 2, 3, 4


class CycleTypeError(ValueError):
    pass


class RangeError(ValueError):
    pass


def _emit(payload, out):
    out.write(json.dumps(to_jsonable(payload), sort_keys=True) + "\n")


def _check_n(n: int, lo: int, hi: int):
    if not lo <= n <= hi:
        raise RangeError(f"n must lie in [{lo}, {hi}], got {n}")


def cmd_chartable(args, out):
    _check_n(args.n, 1, 14)
    table = character_table(args.n)
    classes = [str(l) for l in partitions_of(args.n)]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["alpha"] + classes)
        for alpha, row in zip(classes, table.values):
            w.writerow([alpha] + list(row))
        out.write(buf.getvalue())
    else:
        _emit({"command": "chartable", "n": args.n, "classes": classes,
               "rows": {a: list(r) for a, r in zip(classes, table.values)}}, out)
    return EXIT_OK


def cmd_eigs(args, out):
    _check_n(args.n, 1, 40)
    mu = eigenvalue_table(args.n)
    _emit({"command": "eigs", "n": args.n,
           "eigenvalues": {str(a): m for a, m in zip(partitions_of(args.n), mu.values)}}, out)
    return EXIT_OK


def cmd_boundary(args, out):
    _check_n(args.n, 1, 14)
    try:
        A = ConjClassSet.parse(args.n, args.classes)
    except ValueError as exc:
        raise CycleTypeError(str(exc)) from None
    methods = ["spectral", "matrix", "brute"] if args.method == "all" else [args.method]
    if "brute" in methods and args.n > 8:
        raise RangeError("brute-force boundary needs n <= 8")
    compute = {
        "spectral": spectral_boundary,
        "matrix": boundary_via_classes,
        "brute": lambda S: boundary_bruteforce(explicit_union(S)),
    }
    values = {m: compute[m](A) for m in methods}
    agree = len(set(values.values())) == 1
    _emit({"command": "boundary", "n": args.n, "classes": A.to_json(), "size": A.size,
           "boundary": next(iter(values.values())), "methods": values, "agree": agree}, out)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_lexboundary(args, out):
    _check_n(args.n, 1, 8)
    if not 0 <= args.k <= factorial(args.n):
        raise RangeError("k must lie in [0, n!]")
    payload = {"command": "lexboundary", "n": args.n, "k": args.k,
               "boundary": lex_segment_boundary(args.n, args.k)}
    if args.k >= 1:
        payload["t"] = appendix_t(args.n, args.k)
        payload["appendix_bound"] = appendix_bound(args.n, args.k)
    _emit(payload, out)
    return EXIT_OK


def cmd_ximin(args, out):
    _check_n(args.n, 1, 8)
    if args.profile:
        rows = xi_profile(args.n)
        if args.format == "csv":
            out.write("k,min_boundary\n")
            for k, (b, _) in rows.items():
                out.write(f"{k},{b}\n")
        else:
            _emit({"command": "ximin", "n": args.n,
                   "profile": {k: {"min_boundary": b, "witness": ConjClassSet(args.n, m)}
                               for k, (b, m) in rows.items()}}, out)
        return EXIT_OK
    if args.k is None:
        raise RangeError("give k or --profile")
    if not 0 <= args.k <= factorial(args.n):
        raise RangeError("k must lie in [0, n!]")
    _emit({"command": "ximin", **xi_min(args.n, args.k).to_json()}, out)
    return EXIT_OK


def cmd_verify(args, out):
    report = SUITES[args.suite](max_n=args.max_n, seed=args.seed) if args.max_n else SUITES[args.suite](seed=args.seed)
    for check in report.checks:
        out.write(json.dumps(check.to_json(), sort_keys=True) + "\n")
    _emit({"suite": args.suite, "seed": args.seed, "max_n": args.max_n,
           "passed": report.passed, "checks": len(report.checks),
           "failures": len(report.failures())}, out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _parse_p(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise RangeError(f"cannot read p from {text!r}") from None
    if not 0 < p <= Fraction(1, 2):
        raise RangeError("p must lie in (0, 1/2]")
    return p


def cmd_solve_k(args, out):
    bp = solve_K(_parse_p(args.p), args.M)
    _emit({"command": "solve-k", "p": bp.p, "K": bp.K, "M": bp.M, "t_p": bp.t_p,
           "residual": bp.residual, "K_lower": bp.k_lower()}, out)
    return EXIT_OK


def cmd_solve_kappa(args, out):
    if args.i < 1:
        raise RangeError("i must be positive")
    kp = solve_kappa(_parse_p(args.p), args.i)
    _emit({"command": "solve-kappa", "p": kp.p, "i": kp.i, "kappa": kp.kappa,
           "k": kp.k, "residual": kp.residual}, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conjiso", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", help="irreducible character table of S_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("eigs", help="Laplacian eigenvalue for every partition of n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_eigs)

    p = sub.add_parser("boundary", help="edge-boundary of a union of classes")
    p.add_argument("n", type=int)
    p.add_argument("--classes", required=True, help='e.g. "2+1+1, 3+1"')
    p.add_argument("--method", choices=["spectral", "matrix", "brute", "all"], default="spectral")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("lexboundary", help="boundary of a lexicographic initial segment")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_lexboundary)

    p = sub.add_parser("ximin", help="minimum boundary over unions of classes of size k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--profile", action="store_true")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_ximin)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve-k", help="solve K^(2K) = 1/p")
    p.add_argument("p")
    p.add_argument("--M", type=int, default=18)
    p.set_defaults(func=cmd_solve_k)

    p = sub.add_parser("solve-kappa", help="solve i^kappa kappa^kappa = 1/p")
    p.add_argument("p")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_solve_kappa)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except CycleTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
