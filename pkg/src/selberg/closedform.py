"""Closed-form Selberg-type integrals used as independent oracles.

Everything symbolic here is normalized by J_0 and built directly from
product / terminating-hypergeometric formulas; nothing calls the
recurrence engine.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Sequence

import mpmath

from .exactalg import A, B, ONE, RF, RHO, PoleError, pochhammer_rf
from .partition import PartitionError, canonical, length, monomial_count, schur_dim


@dataclass(frozen=True)
class EvalParams:
    """Numeric parameters (a, b, rho) together with the number of variables N."""

    a: Real
    b: Real
    rho: Real
    n: int

    @property
    def valid(self) -> bool:
        return params_valid(self)

    def point(self) -> tuple:
        return (self.a, self.b, self.rho)


def params_valid(p: EvalParams) -> bool:
    """Convergence region of the Selberg integral for real parameters."""
    if p.n < 1 or not (p.a > 0 and p.b > 0):
        return False
    bounds = [Fraction(1, p.n)]
    if p.n > 1:
        bounds += [p.a / (p.n - 1), p.b / (p.n - 1)]
    return p.rho > -min(bounds)


def j0_value(p: EvalParams, log: bool = False) -> mpmath.mpf:
    """J_0 via log-Gamma; ``log=True`` returns log J_0 instead."""
    if not params_valid(p):
        raise ValueError(f"parameters outside the convergence region: {p}")
    a, b, r = (mpmath.mpf(x) if not isinstance(x, Fraction) else mpmath.mpf(x.numerator) / x.denominator
               for x in p.point())
    n = p.n
    total = mpmath.mpf(0)
    for i in range(1, n + 1):
        total += (mpmath.loggamma(a + (n - i) * r) + mpmath.loggamma(b + (n - i) * r)
                  + mpmath.loggamma(i * r + 1)
                  - mpmath.loggamma(a + b + (2 * n - i - 1) * r) - mpmath.loggamma(r + 1))
    return total if log else mpmath.exp(total)


def gen_poch(x, lam: Sequence[int]) -> RF:
    """Generalized Pochhammer symbol prod_i (x + (1 - i) rho)_{lam_i}."""
    out = ONE
    for i, part in enumerate(canonical(lam), start=1):
        out = out * pochhammer_rf(x + (1 - i) * RHO, part)
    return out


def hyp_terminating(nums: Sequence, dens: Sequence) -> RF:
    """Terminating pFq at argument 1, summed exactly.

    One numerator must be a constant non-positive integer -n; the series
    then stops after the k = n term.
    """
    nums = [x if isinstance(x, RF) else RF(x) for x in nums]
    dens = [x if isinstance(x, RF) else RF(x) for x in dens]
    stops = []
    for x in nums:
        v = x.as_fraction()
        if v is not None and v <= 0 and v.denominator == 1:
            stops.append(int(-v))
    if not stops:
        raise ValueError("series does not terminate: no non-positive integer numerator")
    top = min(stops)
    term = ONE
    total = ONE
    for k in range(top):
        for x in dens:
            if (x + k).is_zero():
                raise PoleError(f"denominator parameter {x} hits zero at k={k}")
        for x in nums:
            term = term * (x + k)
        for x in dens:
            term = term / (x + k)
        term = term / (k + 1)
        total = total + term
    return total


def aomoto_j(m: int, n: int) -> RF:
    """J_(1^m) / J_0."""
    if not 0 <= m <= n:
        raise ValueError(f"m={m} outside 0..{n}")
    return b_column(m, n) * math.comb(n, m)


def b_column(ell: int, n: int) -> RF:
    """B_(1^ell) / J_0 as a ratio of generalized Pochhammer symbols."""
    if not 0 <= ell <= n:
        raise ValueError(f"n={ell} outside 0..{n}")
    col = (1,) * ell
    return gen_poch(A + (n - 1) * RHO, col) / gen_poch(A + B + 2 * (n - 1) * RHO, col)


def _kadell_ratio(lam: Sequence[int], n: int) -> RF:
    return gen_poch(A + (n - 1) * RHO, lam) / gen_poch(A + B + 2 * (n - 1) * RHO, lam)


_ALPHA = A / RHO
_BETA = B / RHO
_GAMMA = ONE / RHO


def b_hook2(n2: int, n1: int, n: int) -> RF:
    """B_(2^n2 1^n1) / J_0 through a terminating 3F2."""
    if n2 < 0 or n1 < 0 or n2 + n1 > n:
        raise ValueError(f"need n2, n1 >= 0 and n2 + n1 <= N, got {n2}, {n1}, {n}")
    lam = (2,) * n2 + (1,) * n1
    col = (1,) * n2
    pref = (_kadell_ratio(lam, n)
            * gen_poch(A + B + (n - 2) * RHO, col)
            / gen_poch(A + B + (2 * n - n1 - n2 - 2) * RHO, col))
    series = hyp_terminating(
        [RF(-n2), RF(-n + n1 + n2), _ALPHA + _BETA + _GAMMA + 2 * n - n2 - 1],
        [_ALPHA + _BETA + n - n2 - 1, _ALPHA + _GAMMA + n - n2],
    )
    return pref * series


def j_two_one(m1: int, m2: int, n: int) -> RF:
    """J_(2^m2 1^m1) / J_0 through a terminating 4F3."""
    if m1 < 0 or m2 < 0 or m1 + m2 > n:
        raise ValueError(f"need m1, m2 >= 0 and m1 + m2 <= N, got {m1}, {m2}, {n}")
    lam = (2,) * m2 + (1,) * m1
    col = (1,) * m2
    pref = (_kadell_ratio(lam, n)
            * gen_poch(A + B + (n - 2) * RHO, col)
            / gen_poch(A + B + (2 * n - m1 - m2 - 2) * RHO, col))
    series = hyp_terminating(
        [RF(-m2), RF(-n + m1 + m2), _ALPHA + _BETA + _GAMMA + 2 * n - m2 - 1, _ALPHA + n - m2 + 1],
        [_ALPHA + _BETA + n - m2 - 1, _ALPHA + _GAMMA + n - m2, RF(m1 + 2)],
    )
    return pref * series * monomial_count(lam, n)


def kadell_rho1(lam: Sequence[int], n: int) -> RF:
    """J_lam / J_0 at rho = 1, where Jack polynomials are Schur polynomials."""
    lam = canonical(lam)
    if length(lam) > n:
        raise PartitionError(f"length of {lam} exceeds N={n}")
    return _kadell_ratio(lam, n).subs("r", 1) * schur_dim(lam, n)


def _classify(shape: tuple[int, ...]) -> tuple[str, int, int]:
    if not shape or shape[0] != 3:
        raise ValueError(f"shape must start with a single 3, got {shape}")
    rest = shape[1:]
    if any(p not in (1, 2) for p in rest):
        raise ValueError(f"unsupported shape {shape}")
    m, k = rest.count(2), rest.count(1)
    if m == 0:
        return "hook", m, k
    if k == 0:
        return "two-rows", m, k
    return "mixed", m, k


def special_b(shape: Sequence[int], n: int, formula: str | None = None) -> RF:
    """B_(3 1^k), B_(3 2^m) or B_(3 2^m 1^k) over J_0 from the worked recurrences.

    The right-hand sides only involve columns and two-column shapes, which
    are taken from :func:`b_column` and :func:`b_hook2`.  ``formula``
    forces one of ``"hook"``, ``"two-rows"``, ``"mixed"`` when a shape
    fits more than one family (e.g. ``(3,)``).
    """
    shape = canonical(shape)
    kind, m, k = _classify(shape)
    if formula is not None:
        kind = formula
    if len(shape) > n - 1:
        raise ValueError(f"need length(shape) <= N - 1, got {shape} with N={n}")
    front = ONE / (A + B + 2 + 2 * RHO * (n - 1))
    if kind == "hook":
        if m:
            raise ValueError(f"{shape} is not of the form (3, 1^k)")
        body = ((A + 1 + RHO * (2 * n - k - 2)) * b_column(k + 1, n)
                - (B - 1) * b_hook2(1, k, n)
                - 2 * RHO * (n - k - 1) * b_hook2(1, k + 1, n))
        if k:
            body = body - RHO * k * b_hook2(2, k - 1, n)
    elif kind == "two-rows":
        if k:
            raise ValueError(f"{shape} is not of the form (3, 2^m)")
        body = ((A + 2 + RHO * (2 * n - m - 2)) * b_hook2(m + 1, 0, n)
                + RHO * (n - m - 1) * b_hook2(m, 2, n)
                - 2 * RHO * (n - m - 1) * b_hook2(m + 1, 1, n))
    elif kind == "mixed":
        body = ((A + 2 + RHO * (2 * n - m - 2)) * b_hook2(m + 1, k, n)
                + RHO * (n - m - k - 1) * b_hook2(m, k + 2, n)
                - 2 * RHO * (n - m - k - 1) * b_hook2(m + 1, k + 1, n))
        if k:
            body = body - k * RHO * b_hook2(m + 2, k - 1, n)
    else:
        raise ValueError(f"unknown formula {formula!r}")
    return front * body
