"""Command-line interface.

JSON reports have the keys ``command``, ``params``, ``result`` and
``elapsed_ms``; every integer inside ``params`` and ``result`` is written
as a decimal string.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 capacity error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
from typing import Any, Sequence

import mpmath

from . import asymptotics as asy
from .counting import format_argmax, gamma, gamma_max, optimal_p_table, series_N_univariate
from .generic import build_generator_tuple
from .oracle import DEFAULT_CAP, CapacityError, enumerate_product_set
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _stringify(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _report(command: str, params: dict, result: dict, start: float) -> str:
    doc = {
        "command": command,
        "params": _stringify(params),
        "result": _stringify(result),
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    return json.dumps(doc, indent=2) + "\n"


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [_positive(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write the report to FILE instead of stdout")
    common.add_argument("--threads", type=_positive, default=1, help="worker processes for tables")

    parser = _Parser(prog="dihedral-growth", description="Product-set growth in the infinite dihedral group.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gamma", parents=[common], help="gamma(k, p, n) from the closed form")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--p", type=_nonnegative, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("gamma-max", parents=[common], help="maximum over p and the optimal p")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("table", parents=[common], help="optimal number of reflections per (n, k)")
    p.add_argument("--k-min", type=_positive, default=2)
    p.add_argument("--k-max", type=_positive, default=10)
    p.add_argument("--n-min", type=_positive, default=2)
    p.add_argument("--n-max", type=_positive, default=20)
    p.add_argument("--format", choices=("md", "csv", "json"), default="md")

    p = sub.add_parser("oracle", parents=[common], help="|S^n| by enumeration on the generic set")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--p", type=_nonnegative, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    p = sub.add_parser("verify", parents=[common], help="run oracle-versus-formula suites")
    p.add_argument("--suite", choices=sorted(SUITES), action="append")

    p = sub.add_parser("series", parents=[common], help="coefficients of ((1+T)/(1-T))^x")
    p.add_argument("--x", type=_nonnegative, required=True)
    p.add_argument("--ymax", type=_nonnegative, required=True)

    p = sub.add_parser("asympt", parents=[common], help="exact leading coefficient of gamma(k, p, n)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--p", type=_positive, required=True)

    p = sub.add_parser("exponent", parents=[common], help="gamma_max(n, n)^(1/n) with bound checks")
    p.add_argument("--samples", type=_int_list, default=[20, 40, 80])
    p.add_argument("--n-max", type=_positive, default=400)
    return parser


def _render_table(table, ks, ns, fmt: str) -> str:
    if fmt == "md":
        lines = ["| n \\ k | " + " | ".join(map(str, ks)) + " |",
                 "|---|" + "---|" * len(ks)]
        for n in ns:
            cells = []
            for k in ks:
                text = format_argmax(table[n, k])
                cells.append(f"**{text}**" if n == k else text)
            lines.append(f"| {n} | " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + [str(k) for k in ks])
    for n in ns:
        writer.writerow([n] + [format_argmax(table[n, k]) for k in ks])
    return buf.getvalue()


def _dispatch(args: argparse.Namespace) -> tuple[int, str]:
    start = time.perf_counter()
    cmd = args.command

    if cmd == "gamma":
        params = {"k": args.k, "p": args.p, "n": args.n}
        return EXIT_OK, _report(cmd, params, {"gamma": gamma(args.k, args.p, args.n)}, start)

    if cmd == "gamma-max":
        value, argmax = gamma_max(args.k, args.n)
        params = {"k": args.k, "n": args.n}
        return EXIT_OK, _report(cmd, params, {"gamma": value, "argmax": list(argmax)}, start)

    if cmd == "table":
        if args.k_min > args.k_max or args.n_min > args.n_max:
            raise UsageError("table: empty range")
        ks = range(args.k_min, args.k_max + 1)
        ns = range(args.n_min, args.n_max + 1)
        table = optimal_p_table(ks, ns, workers=args.threads)
        if args.format != "json":
            return EXIT_OK, _render_table(table, ks, ns, args.format)
        rows = [{"n": n, "k": k, "optimal_p": list(table[n, k])} for n in ns for k in ks]
        params = {"k_min": args.k_min, "k_max": args.k_max, "n_min": args.n_min, "n_max": args.n_max}
        return EXIT_OK, _report(cmd, params, {"cells": rows}, start)

    if cmd == "oracle":
        S = build_generator_tuple(args.k, args.p, args.n)
        size = enumerate_product_set(S, args.n, cap=args.cap)
        params = {"k": args.k, "p": args.p, "n": args.n, "cap": args.cap}
        return EXIT_OK, _report(cmd, params, {"size": size}, start)

    if cmd == "verify":
        suites = args.suite or list(SUITES)
        checks = [c for name in suites for c in run_suite(name)]
        ok = all(c.passed for c in checks)
        result = {
            "status": "pass" if ok else "fail",
            "checks": [
                {"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}
                for c in checks
            ],
        }
        return (EXIT_OK if ok else EXIT_FAILED), _report(cmd, {"suites": suites}, result, start)

    if cmd == "series":
        coeffs = series_N_univariate(args.x, args.ymax)
        return EXIT_OK, _report(cmd, {"x": args.x, "ymax": args.ymax}, {"coefficients": coeffs}, start)

    if cmd == "asympt":
        c = asy.leading_coefficient(args.k, args.p)
        pr = asy.reflection_probability(args.p)
        result = {
            "numerator": c.numerator,
            "denominator": c.denominator,
            "degree": args.k - 1,
            "reflection_probability": {"numerator": pr.numerator, "denominator": pr.denominator},
        }
        return EXIT_OK, _report(cmd, {"k": args.k, "p": args.p}, result, start)

    if cmd == "exponent":
        constant = asy.growth_constant()
        rows = []
        ok = True
        for est in asy.estimate_growth_exponent(args.n_max, args.samples):
            upper = est.gamma <= asy.diagonal_upper_bound(est.n)
            lower = gamma(est.n, 1, est.n) >= asy.diagonal_lower_bound(est.n)
            below_limit = est.value <= constant + 1e-9
            ok = ok and upper and lower and below_limit
            rows.append({
                "n": est.n,
                "gamma_max": est.gamma,
                "value": est.digits(30),
                "upper_bound_holds": upper,
                "lower_bound_holds": lower,
                "below_limit": below_limit,
            })
        result = {"limit": mpmath.nstr(constant, 30), "estimates": rows,
                  "status": "pass" if ok else "fail"}
        params = {"samples": args.samples, "n_max": args.n_max}
        return (EXIT_OK if ok else EXIT_FAILED), _report(cmd, params, result, start)

    raise UsageError(f"unknown command {cmd!r}")


def _execute(argv: Sequence[str] | None) -> tuple[int, str, str | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_USAGE, f"{exc}\n", None
    try:
        code, text = _dispatch(args)
    except UsageError as exc:
        return EXIT_USAGE, f"{exc}\n", None
    except CapacityError as exc:
        return EXIT_CAPACITY, f"capacity error: {exc}\n", None
    except ValueError as exc:
        return EXIT_USAGE, f"error: {exc}\n", None
    return code, text, args.output


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns (exit code, serialized output)."""
    code, text, _ = _execute(argv)
    return code, text


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dihedral-growth-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # prints help and exits
    code, text, path = _execute(argv)
    if path:
        _write_atomic(path, text)
    elif code in (EXIT_OK, EXIT_FAILED):
        sys.stdout.write(text)
    else:
        sys.stderr.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
