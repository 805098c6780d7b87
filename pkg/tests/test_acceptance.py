"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line that is echoed in the pytest
terminal summary.  Running this file directly executes every criterion
and prints the same lines.
"""
import os
import sys
import time
from fractions import Fraction

import mpmath

sys.path.insert(0, os.path.dirname(__file__))

import conftest  # noqa: E402
import test_engine as tables  # noqa: E402
from selberg.closedform import (  # noqa: E402
    EvalParams,
    b_hook2,
    j0_value,
    j_two_one,
    kadell_rho1,
    special_b,
)
from selberg.engine import (  # noqa: E402
    LinearComb,
    SelbergEngine,
    corollary10_comb,
    theorem8_comb,
)
from selberg.exactalg import RF, rf_eq, rf_eval  # noqa: E402
from selberg.kostka import kostka, kostka_row  # noqa: E402
from selberg.partition import monomial_count, partitions_up_to, schur_dim  # noqa: E402
from selberg.quadrature import b_quad  # noqa: E402


def record(num: int, title: str, ok: bool, detail: str, seconds: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {title} ({detail}; {seconds:.2f}s)"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def test_criterion_01_column_base_case():
    bad = []
    with Timer() as t:
        for n in range(1, 7):
            eng = SelbergEngine(n)
            for ell in range(1, n + 1):
                prod = RF(1)
                for i in range(1, ell + 1):
                    prod = prod * (RF.var("a") + (n - i) * RF.var("r")) / (
                        RF.var("a") + RF.var("b") + (2 * n - i - 1) * RF.var("r"))
                if not rf_eq(eng.b((1,) * ell), prod):
                    bad.append((ell, n))
    record(1, "column base case", not bad and t.seconds < 1.0, f"21 cases, mismatches {bad}", t.seconds)


def test_criterion_02_theorem8_residuals():
    bad, count = [], 0
    with Timer() as t:
        for n in range(2, 6):
            eng = SelbergEngine(n)
            for lam in partitions_up_to(6, n - 1):
                if not lam:
                    continue
                for c in range(1, lam[0]):
                    count += 1
                    if not eng.residual(theorem8_comb(lam, n, c)).is_zero():
                        bad.append((lam, n, c))
    record(2, "general recurrence residuals vanish", not bad and t.seconds < 120,
           f"{count} residuals, nonzero {bad}", t.seconds)


def test_criterion_03_corollary10_is_theorem8():
    bad, count = [], 0
    with Timer() as t:
        for n in range(2, 6):
            for lam in partitions_up_to(6, n - 1):
                if not lam or lam[0] < 2 or (len(lam) > 1 and lam[1] == lam[0]):
                    continue
                count += 1
                if not corollary10_comb(lam, n).equals(theorem8_comb(lam, n, lam[0] - 1)):
                    bad.append((lam, n))
    record(3, "solver step equals the general recurrence at c = lam_1 - 1", not bad,
           f"{count} combinations, mismatches {bad}", t.seconds)


def test_criterion_04_kadell_rho1():
    bad, count = [], 0
    with Timer() as t:
        for n in range(1, 5):
            eng = SelbergEngine(n)
            for lam in partitions_up_to(5, n):
                count += 1
                if not rf_eq(eng.schur(lam).subs("r", 1), kadell_rho1(lam, n)):
                    bad.append((lam, n))
    record(4, "Kadell rho = 1 oracle", not bad and t.seconds < 60, f"{count} cases, mismatches {bad}", t.seconds)


def test_criterion_05_hook2_oracle():
    bad, count = [], 0
    with Timer() as t:
        for n in range(1, 6):
            eng = SelbergEngine(n)
            for n2 in range(0, 5):
                for n1 in range(0, 5 - n2):
                    if n2 + n1 > n:
                        continue
                    count += 1
                    if not rf_eq(eng.b((2,) * n2 + (1,) * n1), b_hook2(n2, n1, n)):
                        bad.append((n2, n1, n))
    record(5, "two-column 3F2 oracle", not bad, f"{count} cases, mismatches {bad}", t.seconds)


def test_criterion_06_two_one_schur_oracle():
    bad, count = [], 0
    with Timer() as t:
        for n in range(1, 5):
            eng = SelbergEngine(n)
            for m2 in range(0, 4):
                for m1 in range(0, 4 - m2):
                    if m1 + m2 > n:
                        continue
                    count += 1
                    if not rf_eq(eng.schur((2,) * m2 + (1,) * m1), j_two_one(m1, m2, n)):
                        bad.append((m1, m2, n))
    record(6, "two-column 4F3 Schur oracle", not bad, f"{count} cases, mismatches {bad}", t.seconds)


def _anchor_shapes():
    for k in range(0, 5):
        yield (3,) + (1,) * k
    for m in range(1, 3):
        yield (3,) + (2,) * m
        for k in range(1, 5 - 2 * m):
            yield (3,) + (2,) * m + (1,) * k


def test_criterion_07_worked_anchors():
    bad, count = [], 0
    with Timer() as t:
        for n in range(2, 7):
            eng = SelbergEngine(n)
            for shape in _anchor_shapes():
                if len(shape) > n - 1:
                    continue
                count += 1
                if not rf_eq(eng.b(shape), special_b(shape, n)):
                    bad.append((shape, n))
    record(7, "(3,1^n), (3,2^m), (3,2^m,1^n) anchors", not bad, f"{count} cases, mismatches {bad}", t.seconds)


def test_criterion_08_desk_numerics():
    with Timer() as t:
        eng = SelbergEngine(2)
        j0 = j0_value(EvalParams(1, 1, 1, 2))
        got = {
            "j0": abs(j0 - mpmath.mpf(1) / 6) <= 1e-12,
            "b(2)": rf_eval(eng.b((2,)), (1, 1, 1)) == Fraction(11, 30),
            "b(2,2)": rf_eval(eng.b((2, 2)), (1, 1, 1)) == Fraction(1, 20),
            "schur(2)": rf_eval(eng.schur((2,)), (1, 1, 1)) == Fraction(9, 10),
        }
    failed = [k for k, v in got.items() if not v]
    record(8, "desk numerics at N = 2, a = b = rho = 1", not failed, f"failed {failed}", t.seconds)


def _rel(x, y):
    y = mpmath.mpf(y.numerator) / y.denominator if isinstance(y, Fraction) else mpmath.mpf(y)
    return abs(mpmath.mpf(x) - y) / abs(y)


def test_criterion_09_quadrature_agreement():
    worst_int, worst_gen = mpmath.mpf(0), mpmath.mpf(0)
    with Timer() as t:
        for n in (2, 3):
            eng = SelbergEngine(n)
            for rho in (1, 2):
                for a in (1, 2):
                    for b in (1, 2):
                        p = EvalParams(a, b, rho, n)
                        j0 = b_quad((), p).value
                        for lam in partitions_up_to(4, n):
                            err = _rel(b_quad(lam, p).value / j0, rf_eval(eng.b(lam), (a, b, rho)))
                            worst_int = max(worst_int, err)
        p = EvalParams(2, 2, 0.75, 2)
        j0 = j0_value(p)
        eng = SelbergEngine(2)
        for lam in [(), (1,), (2, 1)]:
            err = _rel(b_quad(lam, p).value / j0, rf_eval(eng.b(lam), p.point()))
            worst_gen = max(worst_gen, err)
    ok = worst_int <= 1e-10 and worst_gen <= 1e-5 and t.seconds < 120
    record(9, "quadrature agreement", ok,
           f"integer rho worst {mpmath.nstr(worst_int, 3)}, rho = 0.75 worst {mpmath.nstr(worst_gen, 3)}", t.seconds)


def test_criterion_10_kostka_anchors():
    bad = []
    with Timer() as t:
        for k in range(0, 7):
            hook = (3,) + (1,) * k
            if kostka(hook, (1,) * (k + 3)) != (k + 2) * (k + 1) // 2:
                bad.append(("all ones", k))
            if kostka(hook, (2,) + (1,) * (k + 1)) != k + 1:
                bad.append(("two ones", k))
        for n in range(1, 7):
            for lam in partitions_up_to(6, n):
                total = sum(c * monomial_count(mu, n) for mu, c in kostka_row(lam).items() if len(mu) <= n)
                if total != schur_dim(lam, n):
                    bad.append((lam, n))
    record(10, "Kostka anchors and all-ones identity", not bad, f"mismatches {bad}", t.seconds)


def test_criterion_11_example_fixtures():
    bad, count = [], 0
    with Timer() as t:
        for m2, m1, n in tables._two_one_cases():
            count += 1
            try:
                tables.test_two_column_tables(m2, m1, n)
            except AssertionError as exc:
                bad.append(("two", m2, m1, n, str(exc)))
        for m3, m2, m1, n in tables._three_cases():
            count += 1
            try:
                tables.test_three_column_tables(m3, m2, m1, n)
            except AssertionError as exc:
                bad.append(("three", m3, m2, m1, n, str(exc)))
        # third branch of the two-column A(k,1) table: the direct reduction gives weight |lam| - 2
        lam, n = (2, 2, 1, 1), 5
        direct = tables.a_reduce(lam, n, 5, 1)
        if not direct.equals(LinearComb(n, {(2, 1, 1): RF(Fraction(1, 2))})):
            bad.append(("direct reduction branch", direct))
        if direct.equals(LinearComb(n, {(2, 1): RF(Fraction(1, 2))})):
            bad.append(("printed branch reproduced", direct))
    record(11, "branch tables for A(k, c)", not bad, f"{count} multiplicity sets, mismatches {bad[:3]}", t.seconds)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
