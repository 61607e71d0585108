"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Coefficients are printed low degree first; JSON output encodes every integer
as a decimal string so nothing is lost to fixed-width number types.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Iterator, Sequence

from qgolden import combinatorics, golden, qfib, sw_identity
from qgolden.report import VerificationReport, compare_coefficients

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SUITES = ("proposition", "theorem", "corollary", "sw", "all")


class UsageError(Exception):
    pass


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _emit(args: argparse.Namespace, command: str, parameters: dict[str, Any], result: Any,
          passed: bool | None = None) -> None:
    if args.json:
        record: dict[str, Any] = {"command": command, "parameters": parameters}
        if isinstance(result, int):
            record["result"] = str(result)
        elif isinstance(result, (list, tuple)) and all(isinstance(c, int) for c in result):
            record["result"] = [str(c) for c in result]
        else:
            record["result"] = result
        if passed is not None:
            record["passed"] = passed
        print(json.dumps(record, separators=(",", ":")))
    elif isinstance(result, (list, tuple)):
        print(" ".join(str(c) for c in result))
    else:
        print(result)


def cmd_qfib(args: argparse.Namespace) -> int:
    build = qfib.qfib_closed if args.closed_form else qfib.qfib_recursive
    params: dict[str, Any] = {"n": args.n}
    if args.closed_form:
        params["closed_form"] = True
    _emit(args, "qfib", params, list(build(args.n).coeffs))
    return EXIT_OK


def cmd_fib(args: argparse.Namespace) -> int:
    _emit(args, "fib", {"n": args.n}, combinatorics.fibonacci(args.n))
    return EXIT_OK


def cmd_catalan(args: argparse.Namespace) -> int:
    build = combinatorics.catalan_closed if args.closed_form else combinatorics.catalan
    params: dict[str, Any] = {"k": args.k}
    if args.closed_form:
        params["closed_form"] = True
    _emit(args, "catalan", params, build(args.k))
    return EXIT_OK


def cmd_phi(args: argparse.Namespace) -> int:
    build = golden.phi_reciprocal_series if args.reciprocal else golden.phi_series
    params: dict[str, Any] = {"order": args.order}
    if args.reciprocal:
        params["reciprocal"] = True
    _emit(args, "phi", params, list(build(args.order).coeffs))
    return EXIT_OK


def cmd_ratio(args: argparse.Namespace) -> int:
    order = args.order if args.order is not None else args.n + 1
    _emit(args, "ratio", {"n": args.n, "order": order}, list(golden.ratio_series(args.n, order).coeffs))
    return EXIT_OK


def check_proposition(n: int) -> VerificationReport:
    return compare_coefficients(
        "proposition", {"n": n}, qfib.qfib_recursive(n).coeffs, qfib.qfib_closed(n).coeffs
    )


def _suite_checks(suite: str, max_n: int, max_m: int) -> Iterator[Callable[[], VerificationReport]]:
    if suite in ("proposition", "all"):
        for n in range(max_n + 1):
            yield lambda n=n: check_proposition(n)
    if suite in ("theorem", "all"):
        for n in range(max_n + 1):
            yield lambda n=n: golden.check_theorem(n)
    if suite in ("corollary", "all"):
        for n in range(max_n + 1):
            yield lambda n=n: golden.check_reciprocal_form(n)
    if suite in ("sw", "all"):
        for n in range(1, max_n + 1):
            for m in range(1, min(n, max_m) + 1):
                yield lambda n=n, m=m: sw_identity.check_sw(n, m)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n is not None or args.m is not None:
        return _verify_single_sw(args)
    if args.explore:
        raise UsageError("--explore needs --n and --m")
    max_n = args.max_n
    if max_n < 1 and args.suite not in ("proposition", "theorem", "corollary"):
        raise UsageError(f"--max-n must be >= 1 for suite {args.suite!r}")
    reports = [check() for check in _suite_checks(args.suite, max_n, args.max_m)]
    passed = all(r.passed for r in reports)
    if args.json:
        _emit(args, "verify", {"suite": args.suite, "max_n": max_n, "max_m": args.max_m},
              [r.to_dict() for r in reports], passed)
    else:
        for r in reports:
            print(r.summary())
        failed = sum(not r.passed for r in reports)
        print(f"{args.suite}: {len(reports) - failed}/{len(reports)} checks passed")
    return EXIT_OK if passed else EXIT_FAILED


def _verify_single_sw(args: argparse.Namespace) -> int:
    if args.suite != "sw":
        raise UsageError("--n/--m only apply to the sw suite")
    if args.n is None or args.m is None:
        raise UsageError("--n and --m must be given together")
    n, m = args.n, args.m
    if args.explore:
        # no assertion is made outside m <= n; just report the direct sum
        _emit(args, "verify", {"suite": "sw", "n": n, "m": m, "explore": True}, sw_identity.sw_lhs(n, m))
        return EXIT_OK
    try:
        report = sw_identity.check_sw(n, m)
    except sw_identity.HypothesisError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit(args, "verify", {"suite": "sw", "n": n, "m": m}, [report.to_dict()], report.passed)
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgolden",
        description="q-Fibonacci polynomials, the q-golden ratio, and exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit one JSON record")
        return p

    p = add("qfib", "coefficients of F_n(q), lowest degree first")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--closed-form", action="store_true", help="use the binomial sum")
    p.set_defaults(func=cmd_qfib)

    p = add("fib", "Fibonacci number with F_0 = F_1 = 1")
    p.add_argument("n", type=_nonneg_int)
    p.set_defaults(func=cmd_fib)

    p = add("catalan", "Catalan number C_k")
    p.add_argument("k", type=_nonneg_int)
    p.add_argument("--closed-form", action="store_true", help="use C(2k, k)/(k + 1)")
    p.set_defaults(func=cmd_catalan)

    p = add("phi", "q-golden ratio series")
    p.add_argument("--order", type=_pos_int, required=True)
    p.add_argument("--reciprocal", action="store_true", help="print 1/phi(q) instead")
    p.set_defaults(func=cmd_phi)

    p = add("ratio", "F_{n+1}(q)/F_n(q) as a truncated series")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--order", type=_pos_int, default=None, help="default n + 1")
    p.set_defaults(func=cmd_ratio)

    p = add("verify", "run identity checks; exit 1 if any fails")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=_nonneg_int, default=60)
    p.add_argument("--max-m", type=_pos_int, default=14)
    p.add_argument("--n", type=_pos_int, default=None, help="single sw check at this n")
    p.add_argument("--m", type=_pos_int, default=None, help="single sw check at this m")
    p.add_argument("--explore", action="store_true",
                   help="with --n/--m, print the direct sum without checking (allows m > n)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qgolden {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
