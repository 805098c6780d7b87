"""Command-line front end.

    selberg b 2,1 --n 3 [--eval a=1,b=1,rho=1] [--json]
    selberg schur 2 --n 2
    selberg kostka 3,1 [2,1,1]
    selberg quad 2 --n 2 --a 1 --b 1 --rho 1
    selberg verify --suites thm8,closed --max-weight 5 --n 4
    selberg cache-info --cache results.json

Exit status: 0 ok, 2 parse error, 3 precondition violated, 4 pole at the
evaluation point, 5 verification failure, 6 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from . import verify as verify_mod
from .closedform import EvalParams
from .engine import ResultCache, SelbergEngine
from .exactalg import PoleError, rf_eval
from .kostka import kostka, kostka_row
from .partition import PartitionError, format_partition, length, parse_partition
from .quadrature import QuadratureError, b_quad, j_schur_quad

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_POLE = 4
EXIT_VERIFY = 5
EXIT_NUMERIC = 6


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc


def _number(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_PARSE, f"not a number: {text!r}") from exc


def _eval_point(text: str) -> tuple[Fraction, Fraction, Fraction]:
    values = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in ("a", "b", "rho", "r"):
            raise CliError(EXIT_PARSE, f"expected a=..,b=..,rho=.., got {text!r}")
        values["rho" if key == "r" else key] = _number(val)
    missing = {"a", "b", "rho"} - set(values)
    if missing:
        raise CliError(EXIT_PARSE, f"missing values for {', '.join(sorted(missing))}")
    return values["a"], values["b"], values["rho"]


def _cache(args) -> ResultCache | None:
    path = getattr(args, "cache", None) or os.environ.get("SELBERG_CACHE")
    if not path:
        return None
    try:
        return ResultCache(path)
    except (OSError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read cache {path}: {exc}") from exc


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _symbolic(args, kind: str) -> int:
    lam = _partition(args.partition)
    if args.n < 1:
        raise CliError(EXIT_PRECONDITION, "N must be positive")
    if length(lam) > args.n:
        raise CliError(EXIT_PRECONDITION, f"length {length(lam)} of ({format_partition(lam)}) exceeds N={args.n}")
    cache = _cache(args)
    engine = SelbergEngine(args.n, cache)
    value = engine.b(lam) if kind == "b" else engine.schur(lam)
    if cache is not None:
        cache.save()
    payload = {"partition": list(lam), "N": args.n}
    if args.eval:
        point = _eval_point(args.eval)
        try:
            result = rf_eval(value, point)
        except PoleError as exc:
            raise CliError(EXIT_POLE, str(exc)) from exc
        payload["value"] = str(result)
        _emit(args, payload, str(result))
    else:
        payload.update(num=str(value.num), den=str(value.den))
        _emit(args, payload, str(value))
    return EXIT_OK


def cmd_b(args) -> int:
    return _symbolic(args, "b")


def cmd_schur(args) -> int:
    return _symbolic(args, "schur")


def cmd_kostka(args) -> int:
    lam = _partition(args.lam)
    if args.mu is not None:
        mu = _partition(args.mu)
        try:
            k = kostka(lam, mu)
        except PartitionError as exc:
            raise CliError(EXIT_PRECONDITION, str(exc)) from exc
        _emit(args, {"lambda": list(lam), "mu": list(mu), "K": k}, str(k))
        return EXIT_OK
    row = kostka_row(lam)
    ordered = sorted(row.items(), reverse=True)
    payload = {"lambda": list(lam), "row": [{"mu": list(mu), "K": k} for mu, k in ordered]}
    text = "; ".join(f"{format_partition(mu) or '()'}:{k}" for mu, k in ordered)
    _emit(args, payload, "{" + text + "}")
    return EXIT_OK


def cmd_quad(args) -> int:
    lam = _partition(args.partition)
    p = EvalParams(_number(args.a), _number(args.b), _number(args.rho), args.n)
    if not p.valid:
        raise CliError(EXIT_PRECONDITION, f"parameters outside the convergence region: {p}")
    if length(lam) > args.n or not 1 <= args.n <= 3:
        raise CliError(EXIT_PRECONDITION, "need length(partition) <= N <= 3")
    if p.rho.denominator != 1:
        # non-integer rho goes through floating quadrature anyway
        p = EvalParams(p.a, p.b, float(p.rho), p.n)
    try:
        res = j_schur_quad(lam, p) if args.schur else b_quad(lam, p)
    except QuadratureError as exc:
        raise CliError(EXIT_NUMERIC, str(exc)) from exc
    value = mpmath.nstr(res.value, 15)
    payload = {"partition": list(lam), "N": args.n, "value": value,
               "abs_error_estimate": res.abs_error_estimate, "method": res.method}
    _emit(args, payload, value)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    try:
        checks = verify_mod.run_suites(suites, args.max_weight, args.n)
    except ValueError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from exc
    failed = [c for c in checks if not c.passed]
    if args.json:
        print(json.dumps({
            "checks": [{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in checks],
            "passed": len(checks) - len(failed),
            "failed": len(failed),
        }, sort_keys=True))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)} passed, {len(failed)} failed")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_cache_info(args) -> int:
    cache = _cache(args)
    if cache is None:
        raise CliError(EXIT_PRECONDITION, "no cache given (use --cache or SELBERG_CACHE)")
    info = cache.summary()
    info["path"] = cache.path
    text = (f"{cache.path}: {info['entries']} entries, max weight {info['max_weight']}, "
            + ", ".join(f"N={n}: {c}" for n, c in info["per_N"].items()))
    _emit(args, info, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selberg", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if cache:
            p.add_argument("--cache", help="result cache file (default: $SELBERG_CACHE)")

    for name, fn, help_ in (("b", cmd_b, "normalized monomial integral B_mu / J_0"),
                            ("schur", cmd_schur, "normalized Selberg-Schur integral J_lam / J_0")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("partition", help='e.g. "2,1", "2^2 1" or "" for the empty partition')
        p.add_argument("--n", type=int, required=True, help="number of variables N")
        p.add_argument("--eval", help="evaluate at a=..,b=..,rho=.. (rationals allowed)")
        common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("kostka", help="Kostka number K_lam,mu or the full row of lam")
    p.add_argument("lam")
    p.add_argument("mu", nargs="?")
    common(p, cache=False)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("quad", help="numerical B_lam (or J_lam with --schur), N <= 3")
    p.add_argument("partition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--schur", action="store_true")
    common(p, cache=False)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suites", default=",".join(verify_mod.SUITES),
                   help=f"comma-separated subset of {','.join(verify_mod.SUITES)}")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--n", type=int, default=4)
    common(p, cache=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cache-info", help="summarize a result cache")
    common(p)
    p.set_defaults(func=cmd_cache_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
