"""Numerical values of B_lam and J_lam, independent of the symbolic engine.

Two routes:

* positive-integer rho: the factor prod_{i<j} (y_i - y_j)^(2 rho) is a
  polynomial, so the integral is a finite signed sum of products of Beta
  moments, evaluated in extended precision;
* anything else: nested adaptive quadrature over the ordered region
  0 < y_1 < ... < y_N < 1, summing the monomial over all N! orderings.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
from scipy import integrate

from .closedform import EvalParams, params_valid
from .kostka import kostka_row
from .partition import PartitionError, canonical, length, monomial_count, pad

MAX_N = 3
_DPS = 50


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


@dataclass(frozen=True)
class QuadResult:
    value: mpmath.mpf
    abs_error_estimate: float
    method: str  # "beta-expansion" | "adaptive" | "beta-closed-form"


def _mp(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def _integer_rho(rho) -> int | None:
    if isinstance(rho, bool):
        return None
    if isinstance(rho, int):
        return rho if rho > 0 else None
    if isinstance(rho, Fraction):
        return int(rho) if rho.denominator == 1 and rho > 0 else None
    if isinstance(rho, float) and rho.is_integer() and rho > 0:
        return int(rho)
    return None


def vandermonde_power(n: int, power: int) -> dict[tuple[int, ...], int]:
    """prod_{i<j} (y_i - y_j)^power expanded as {exponent vector: coefficient}."""
    poly: dict[tuple[int, ...], int] = {(0,) * n: 1}
    for i, j in itertools.combinations(range(n), 2):
        for _ in range(power):
            nxt: dict[tuple[int, ...], int] = {}
            for e, c in poly.items():
                up_i = list(e)
                up_i[i] += 1
                up_j = list(e)
                up_j[j] += 1
                for key, val in ((tuple(up_i), c), (tuple(up_j), -c)):
                    total = nxt.get(key, 0) + val
                    if total:
                        nxt[key] = total
                    else:
                        nxt.pop(key, None)
            poly = nxt
    return poly


def monomial_beta_integral(exponents: Sequence[int], p: EvalParams) -> QuadResult:
    """Exact-expansion value of int y^exponents Phi(y) dy for integer rho, any N.

    ``exponents`` may be any non-negative vector of length <= N (it is not
    required to be sorted).
    """
    rho = _integer_rho(p.rho)
    if rho is None:
        raise ValueError("beta expansion needs a positive integer rho")
    n = p.n
    ex = list(exponents) + [0] * (n - len(exponents))
    with mpmath.workdps(_DPS):
        a, b = _mp(p.a), _mp(p.b)
        moments: dict[int, mpmath.mpf] = {}

        def moment(e: int) -> mpmath.mpf:
            if e not in moments:
                moments[e] = mpmath.beta(a + e, b)
            return moments[e]

        total = mpmath.mpf(0)
        scale = mpmath.mpf(0)
        for e, c in vandermonde_power(n, 2 * rho).items():
            term = c * mpmath.fprod(moment(ei + xi) for ei, xi in zip(e, ex))
            total += term
            scale += abs(term)
        err = float(scale * mpmath.mpf(10) ** (-_DPS + 5))
    return QuadResult(+total, err, "beta-expansion")


def _adaptive(lam_padded: list[int], p: EvalParams, epsabs: float) -> QuadResult:
    n = p.n
    a, b, rho = float(p.a), float(p.b), float(p.rho)
    perms = list(itertools.permutations(lam_padded))

    def integrand(*y):
        weight = 1.0
        for yi in y:
            weight *= yi ** (a - 1) * (1 - yi) ** (b - 1)
        for i in range(n):
            for j in range(i + 1, n):
                weight *= (y[j] - y[i]) ** (2 * rho)
        mono = sum(math.prod(yi**e for yi, e in zip(y, ex)) for ex in perms)
        return mono * weight

    # innermost variable first: y_1 in (0, y_2), ..., y_N in (0, 1)
    ranges = [(lambda *outer: (0.0, outer[0])) for _ in range(n - 1)] + [(0.0, 1.0)]
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, err = integrate.nquad(
                integrand, ranges, opts={"epsabs": epsabs, "epsrel": epsabs, "limit": 200}
            )
        except integrate.IntegrationWarning as exc:
            raise QuadratureError(f"adaptive quadrature did not converge: {exc}") from exc
    if err > max(epsabs, epsabs * abs(value)) * 10 ** (n - 1):
        raise QuadratureError(f"error estimate {err:g} above tolerance for value {value:g}")
    return QuadResult(mpmath.mpf(value), float(err), "adaptive")


def b_quad(lam: Sequence[int], p: EvalParams, n: int | None = None, epsabs: float = 1e-8) -> QuadResult:
    """Numerical B_lam (not normalized by J_0) for N <= 3."""
    n = p.n if n is None else n
    if n != p.n:
        p = EvalParams(p.a, p.b, p.rho, n)
    if not 1 <= n <= MAX_N:
        raise ValueError(f"numerical oracle supports 1 <= N <= {MAX_N}, got {n}")
    lam = canonical(lam)
    if length(lam) > n:
        raise PartitionError(f"length of {lam} exceeds N={n}")
    if not params_valid(p):
        raise ValueError(f"parameters outside the convergence region: {p}")
    if n == 1:
        with mpmath.workdps(_DPS):
            e = lam[0] if lam else 0
            val = mpmath.beta(_mp(p.a) + e, _mp(p.b))
        return QuadResult(+val, 0.0, "beta-closed-form")
    if _integer_rho(p.rho) is not None:
        return monomial_beta_integral(lam, p)
    return _adaptive(pad(lam, n), p, epsabs)


def j_schur_quad(lam: Sequence[int], p: EvalParams, n: int | None = None) -> QuadResult:
    """Numerical J_lam = sum_mu m_mu(1^N) K_{lam,mu} B_mu."""
    n = p.n if n is None else n
    lam = canonical(lam)
    if length(lam) > n:
        raise PartitionError(f"length of {lam} exceeds N={n}")
    total = mpmath.mpf(0)
    err = 0.0
    methods = set()
    for mu, k in sorted(kostka_row(lam).items()):
        if length(mu) > n:
            continue
        res = b_quad(mu, p, n)
        w = k * monomial_count(mu, n)
        total += w * res.value
        err += w * res.abs_error_estimate
        methods.add(res.method)
    method = methods.pop() if len(methods) == 1 else "mixed"
    return QuadResult(total, err, method)
