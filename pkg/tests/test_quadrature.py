import itertools
from fractions import Fraction

import mpmath
import pytest

from selberg.closedform import EvalParams, aomoto_j, j0_value
from selberg.engine import compute_b
from selberg.exactalg import rf_eval
from selberg.partition import PartitionError, partitions_up_to
from selberg.quadrature import (
    QuadratureError,
    b_quad,
    j_schur_quad,
    monomial_beta_integral,
    vandermonde_power,
)

ONE_POINT = EvalParams(1, 1, 1, 2)


def close(x, y, rel):
    return abs(mpmath.mpf(x) - mpmath.mpf(y)) <= rel * abs(mpmath.mpf(y))


def frac(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def test_examples():
    assert close(b_quad((2,), ONE_POINT).value, frac(Fraction(11, 180)), 1e-14)
    assert close(b_quad((), ONE_POINT).value, frac(Fraction(1, 6)), 1e-14)
    assert close(j_schur_quad((2,), ONE_POINT).value, frac(Fraction(3, 20)), 1e-14)
    assert close(b_quad((1, 1), ONE_POINT).value, frac(Fraction(1, 36)), 1e-14)
    assert b_quad((2,), ONE_POINT).method == "beta-expansion"


def test_one_variable_is_beta():
    p = EvalParams(Fraction(3, 2), 2, Fraction(1, 3), 1)
    got = b_quad((3,), p)
    assert got.method == "beta-closed-form"
    assert close(got.value, mpmath.beta(mpmath.mpf(3) / 2 + 3, 2), 1e-30)


def test_vandermonde_power():
    assert vandermonde_power(2, 2) == {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    assert sum(vandermonde_power(3, 2).values()) == 0
    assert len(vandermonde_power(1, 4)) == 1


def test_j_schur_linear_and_empty():
    for p in [EvalParams(2, 1, 1, 3), EvalParams(2, 2, 0.75, 2)]:
        ratio = rf_eval(aomoto_j(1, p.n), p.point())
        ratio = frac(ratio) if isinstance(ratio, Fraction) else ratio
        assert close(j_schur_quad((1,), p).value, ratio * j0_value(p), 1e-6)
        assert close(j_schur_quad((), p).value, j0_value(p), 1e-6)


def test_symmetry_spot_check():
    p = EvalParams(2, 1, 2, 3)
    base = monomial_beta_integral((3, 1, 0), p).value
    for perm in itertools.permutations((3, 1, 0)):
        assert close(monomial_beta_integral(perm, p).value, base, 1e-30)


@pytest.mark.parametrize("n, rho", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_integer_rho_against_engine(n, rho):
    for a, b in itertools.product((1, 2), repeat=2):
        p = EvalParams(a, b, rho, n)
        j0 = b_quad((), p).value
        for lam in partitions_up_to(4, n):
            exact = frac(rf_eval(compute_b(lam, n), (a, b, rho)))
            assert close(b_quad(lam, p).value / j0, exact, 1e-10), (lam, p)


def test_generic_rho_against_engine():
    p = EvalParams(2, 2, 0.75, 2)
    j0 = j0_value(p)
    for lam in [(), (1,), (2, 1)]:
        res = b_quad(lam, p)
        assert res.method == "adaptive"
        assert close(res.value / j0, rf_eval(compute_b(lam, 2), p.point()), 1e-5)


def test_preconditions():
    with pytest.raises(ValueError):
        b_quad((1,), EvalParams(1, 1, 1, 4))
    with pytest.raises(PartitionError):
        b_quad((1, 1, 1), ONE_POINT)
    with pytest.raises(ValueError):
        b_quad((1,), EvalParams(1, 1, -0.6, 2))
    with pytest.raises(ValueError):
        monomial_beta_integral((1,), EvalParams(1, 1, 0.5, 2))


def test_failure_is_reported():
    # a near-singular kernel with a tiny budget cannot meet the tolerance
    with pytest.raises(QuadratureError):
        b_quad((), EvalParams(0.05, 0.05, 0.3, 2), epsabs=1e-14)
