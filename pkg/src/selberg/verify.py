"""Verification suites: engine self-consistency and agreement with oracles."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import mpmath

from . import closedform as cf
from .engine import corollary10_comb, engine_for, theorem8_comb
from .exactalg import rf_eq, rf_eval
from .kostka import kostka, kostka_row
from .partition import format_partition, monomial_count, partitions_up_to, schur_dim
from .quadrature import b_quad

SUITES = ("thm8", "closed", "quad", "kostka")
MAX_WEIGHT = 8
MAX_N = 6


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        tail = f": {self.detail}" if self.detail and not self.passed else ""
        return f"{tag} [{self.suite}] {self.name}{tail}"


def _p(lam) -> str:
    return "(" + format_partition(lam) + ")"


def thm8_suite(max_weight: int, max_n: int) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        eng = engine_for(n)
        for lam in partitions_up_to(max_weight, n - 1):
            if not lam or lam[0] < 2:
                continue
            report = eng.verify_theorem8(lam)
            for c, ok in report.results.items():
                yield Check("thm8", f"residual lam={_p(lam)} N={n} c={c}", ok)
            if all(p < lam[0] for p in lam[1:]):
                same = corollary10_comb(lam, n).equals(theorem8_comb(lam, n, lam[0] - 1))
                yield Check("thm8", f"corollary == general c lam={_p(lam)} N={n}", same)


def closed_suite(max_weight: int, max_n: int) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        eng = engine_for(n)
        for m in range(0, min(n, max_weight) + 1):
            yield Check("closed", f"column (1^{m}) N={n}", rf_eq(eng.b((1,) * m), cf.b_column(m, n)))
            yield Check("closed", f"aomoto e_{m} N={n}", rf_eq(eng.schur((1,) * m), cf.aomoto_j(m, n)))
        for n2 in range(0, n + 1):
            for n1 in range(0, n - n2 + 1):
                lam = (2,) * n2 + (1,) * n1
                if 2 * n2 + n1 > max_weight:
                    continue
                yield Check("closed", f"3F2 b{_p(lam)} N={n}", rf_eq(eng.b(lam), cf.b_hook2(n2, n1, n)))
                yield Check("closed", f"4F3 J{_p(lam)} N={n}", rf_eq(eng.schur(lam), cf.j_two_one(n1, n2, n)))
        for lam in partitions_up_to(max_weight, n):
            ok = rf_eq(eng.schur(lam).subs("r", 1), cf.kadell_rho1(lam, n))
            yield Check("closed", f"rho=1 J{_p(lam)} N={n}", ok)
        for lam in partitions_up_to(max_weight, n - 1):
            if lam and lam[0] == 3 and lam.count(3) == 1:
                ok = rf_eq(eng.b(lam), cf.special_b(lam, n))
                yield Check("closed", f"worked formula b{_p(lam)} N={n}", ok)


def _rel(x, y) -> float:
    return float(abs(x - y) / abs(y))


def quad_suite(max_weight: int, max_n: int) -> Iterator[Check]:
    w = min(max_weight, 4)
    for n in range(2, min(max_n, 3) + 1):
        eng = engine_for(n)
        for rho in (1, 2):
            for a in (1, 2):
                for b in (1, 2):
                    p = cf.EvalParams(a, b, rho, n)
                    j0 = cf.j0_value(p)
                    for lam in partitions_up_to(w, n):
                        exact = rf_eval(eng.b(lam), p)
                        num = b_quad(lam, p).value / j0
                        err = _rel(num, exact)
                        yield Check("quad", f"b{_p(lam)} N={n} a={a} b={b} rho={rho}",
                                    err <= 1e-10, f"rel err {err:.2e}")
    if max_n >= 2:
        p = cf.EvalParams(2, 2, Fraction(3, 4), 2)
        j0 = cf.j0_value(p)
        eng = engine_for(2)
        for lam in [(), (1,), (2, 1)]:
            exact = rf_eval(eng.b(lam), p)
            num = b_quad(lam, cf.EvalParams(2, 2, 0.75, 2)).value / j0
            err = _rel(num, exact)
            yield Check("quad", f"b{_p(lam)} N=2 a=2 b=2 rho=0.75", err <= 1e-5, f"rel err {err:.2e}")


def kostka_suite(max_weight: int, max_n: int) -> Iterator[Check]:
    for k in range(0, 7):
        hook = (3,) + (1,) * k
        v1 = kostka(hook, (1,) * (k + 3))
        yield Check("kostka", f"K[(3,1^{k}),(1^{k + 3})] = {(k + 2) * (k + 1) // 2}",
                    v1 == math.factorial(k + 2) // (2 * math.factorial(k)), f"got {v1}")
        v2 = kostka(hook, (2,) + (1,) * (k + 1))
        yield Check("kostka", f"K[(3,1^{k}),(2,1^{k + 1})] = {k + 1}", v2 == k + 1, f"got {v2}")
    for n in range(1, max_n + 1):
        for lam in partitions_up_to(min(max_weight, 6), n):
            total = sum(k * monomial_count(mu, n) for mu, k in kostka_row(lam).items() if len(mu) <= n)
            yield Check("kostka", f"sum K m(1^N) = s(1^N) lam={_p(lam)} N={n}",
                        total == schur_dim(lam, n), f"{total} != {schur_dim(lam, n)}")


_RUNNERS: dict[str, Callable[[int, int], Iterator[Check]]] = {
    "thm8": thm8_suite,
    "closed": closed_suite,
    "quad": quad_suite,
    "kostka": kostka_suite,
}


def run_suites(suites, max_weight: int, max_n: int) -> list[Check]:
    if max_weight > MAX_WEIGHT or max_n > MAX_N:
        raise ValueError(f"bounds capped at max weight {MAX_WEIGHT} and N {MAX_N}")
    out: list[Check] = []
    with mpmath.workdps(30):
        for name in suites:
            if name not in _RUNNERS:
                raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
            out.extend(_RUNNERS[name](max_weight, max_n))
    return out
