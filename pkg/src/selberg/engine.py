"""Recurrence engine for normalized monomial Selberg integrals.

Every symbol ``b[mu]`` below denotes ``B_mu / J_0``: the integral of the
single monomial ``y^mu`` against the Selberg kernel, divided by the plain
Selberg integral.  All the identities handled here are linear and
homogeneous in these symbols, so they hold verbatim after normalization.

Brackets ``[lam + d_1 e_1 + d_k e_k]`` are built with
:func:`selberg.partition.shift`, which pads ``lam`` to length N, applies
the 1-based deltas and returns the ordered partner.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exactalg import A, B, ONE, RF, RHO, ZERO, parse_rf
from .kostka import kostka_row
from .partition import (
    Partition,
    PartitionError,
    canonical,
    dominates,
    format_partition,
    length,
    monomial_count,
    pad,
    parse_partition,
    shift,
    weight,
)


HALF = RF(Fraction(1, 2))


class EngineInvariantError(RuntimeError):
    """The recurrence hit a state the derivation says cannot occur."""


class LinearComb:
    """A finite sum ``sum_nu coeff_nu * b[nu]`` over partitions of length <= N."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Partition, RF] | None = None):
        self.n = n
        self.terms: dict[Partition, RF] = {}
        for nu, c in (terms or {}).items():
            self.add(nu, c)

    def add(self, nu: Sequence[int], coeff) -> "LinearComb":
        nu = canonical(nu)
        if length(nu) > self.n:
            raise PartitionError(f"{nu} is longer than N={self.n}")
        total = self.terms.get(nu, ZERO) + coeff
        if total.is_zero():
            self.terms.pop(nu, None)
        else:
            self.terms[nu] = total
        return self

    def coeff(self, nu: Sequence[int]) -> RF:
        return self.terms.get(canonical(nu), ZERO)

    def scale(self, c) -> "LinearComb":
        return LinearComb(self.n, {nu: v * c for nu, v in self.terms.items()})

    def __add__(self, other: "LinearComb") -> "LinearComb":
        out = LinearComb(self.n, self.terms)
        for nu, c in other.terms.items():
            out.add(nu, c)
        return out

    def __neg__(self) -> "LinearComb":
        return self.scale(-1)

    def __sub__(self, other: "LinearComb") -> "LinearComb":
        return self + (-other)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def is_empty(self) -> bool:
        return not self.terms

    def equals(self, other: "LinearComb") -> bool:
        return (self - other).is_empty()

    def substitute(self, value: Callable[[Partition], RF]) -> RF:
        total = ZERO
        for nu in sorted(self.terms):
            total = total + self.terms[nu] * value(nu)
        return total

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*b{nu}" for nu, c in sorted(self.terms.items()))
        return f"LinearComb(N={self.n}: {body or '0'})"


@dataclass
class KExpr:
    """``k0_coeff * K_lam(0) + b_terms`` for the boundary integral K_lam(c)."""

    k0_coeff: RF
    b_terms: LinearComb
    base: Partition
    c: int


def _check(lam: Sequence[int], n: int) -> tuple[Partition, list[int]]:
    lam = canonical(lam)
    return lam, pad(lam, n)


# -- reductions of the auxiliary integrals ------------------------------------


def a_reduce(lam: Sequence[int], n: int, k: int, c: int) -> LinearComb:
    """A_lam(k, c) written in terms of b-symbols."""
    lam, v = _check(lam, n)
    if not 2 <= k <= n:
        raise ValueError(f"k={k} outside 2..{n}")
    if c < 0:
        raise ValueError("c must be non-negative")
    l1, lk = v[0], v[k - 1]
    out = LinearComb(n)
    if c < lk:
        for i in range(lk - c):
            out.add(shift(lam, n, [(1, c + i - l1), (k, -(1 + i))]), -HALF)
    elif c > lk:
        for i in range(c - lk):
            out.add(shift(lam, n, [(1, c - 1 - i - l1), (k, i)]), HALF)
    return out


def a_top(lam: Sequence[int], n: int, k: int) -> LinearComb:
    """A_lam(k) = A_lam(k, lam_1) via its dedicated closed sum."""
    lam, v = _check(lam, n)
    if not 2 <= k <= n:
        raise ValueError(f"k={k} outside 2..{n}")
    out = LinearComb(n)
    for i in range(v[0] - v[k - 1]):
        out.add(shift(lam, n, [(1, -(1 + i)), (k, i)]), HALF)
    return out


def k_shift(lam: Sequence[int], n: int, c: int) -> KExpr:
    """K_lam(c) = K_lam(0) - sum_{i<c} b[lam + (i - lam_1) e_1]."""
    lam, v = _check(lam, n)
    if not 0 <= c <= v[0]:
        raise ValueError(f"c={c} outside 0..{v[0]}")
    terms = LinearComb(n)
    for i in range(c):
        terms.add(shift(lam, n, [(1, i - v[0])]), -ONE)
    return KExpr(ONE, terms, lam, c)


def k_stokes(lam: Sequence[int], n: int, c: int) -> LinearComb:
    """The combination equal to (b - 1) K_lam(c), from integrating by parts in y_1."""
    lam, v = _check(lam, n)
    if c == 0:
        raise ValueError("c = 0 needs b[lam - (lam_1 + 1) e_1], which is not a partition")
    if not 1 <= c <= v[0]:
        raise ValueError(f"c={c} outside 1..{v[0]}")
    out = LinearComb(n)
    for k in range(2, n + 1):
        out = out + a_reduce(lam, n, k, c).scale(2 * RHO)
    out.add(shift(lam, n, [(1, c - 1 - v[0])]), A - 1 + c)
    return out


def _top_sum(lam: Partition, v: list[int], n: int) -> LinearComb:
    # sum_k sum_{i=1}^{lam_1 - lam_k} b[lam - i e_1 + (i-1) e_k]
    out = LinearComb(n)
    for k in range(2, n + 1):
        for i in range(1, v[0] - v[k - 1] + 1):
            out.add(shift(lam, n, [(1, -i), (k, i - 1)]), ONE)
    return out


def k_zero(lam: Sequence[int], n: int) -> LinearComb:
    """The combination equal to (b - 1) K_lam(0)."""
    lam, v = _check(lam, n)
    if not lam:
        raise ValueError("k_zero needs lam_1 >= 1")
    out = LinearComb(n)
    for i in range(v[0]):
        out.add(shift(lam, n, [(1, i - v[0])]), B - 1)
    out.add(shift(lam, n, [(1, -1)]), A - 1 + v[0])
    return out + _top_sum(lam, v, n).scale(RHO)


def theorem8_comb(lam: Sequence[int], n: int, c: int) -> LinearComb:
    """LHS - RHS of the general-c recurrence; annihilated by the true b-values."""
    lam, v = _check(lam, n)
    if length(lam) >= n:
        raise ValueError(f"needs length < N, got {lam} with N={n}")
    l1 = v[0]
    if not 1 <= c < l1:
        raise ValueError(f"c={c} outside 1..{l1 - 1}")
    out = LinearComb(n)
    for i in range(c, l1):
        out.add(shift(lam, n, [(1, i - l1)]), B - 1)
    out.add(shift(lam, n, [(1, -1)]), A - 1 + l1)
    out.add(shift(lam, n, [(1, c - 1 - l1)]), -(A - 1 + c))
    for k in range(2, n + 1):
        lk = v[k - 1]
        hi, lo = max(lk, c), min(lk, c)
        sign = 1 if lk < c else -1
        for i in range(1, hi - lo + 1):
            nu = shift(lam, n, [(1, hi - i - l1), (k, lo + i - 1 - lk)])
            out.add(nu, -sign * RHO)
    return out + _top_sum(lam, v, n).scale(RHO)


def corollary10_comb(lam: Sequence[int], n: int) -> LinearComb:
    """The c = lam_1 - 1 recurrence, valid when lam_1 exceeds every other part."""
    lam, v = _check(lam, n)
    if length(lam) >= n:
        raise ValueError(f"needs length < N, got {lam} with N={n}")
    l1 = v[0]
    if l1 < 2 or any(p >= l1 for p in v[1:]):
        raise ValueError(f"needs lam_1 >= 2 strictly above the other parts, got {lam}")
    out = LinearComb(n)
    out.add(shift(lam, n, [(1, -1)]), A + B + l1 - 2)
    out.add(shift(lam, n, [(1, -2)]), -(A + l1 - 2))
    out = out + _top_sum(lam, v, n).scale(RHO)
    for k in range(2, n + 1):
        for i in range(1, v[0] - v[k - 1]):
            out.add(shift(lam, n, [(1, -(i + 1)), (k, i - 1)]), -RHO)
    return out


# -- closed pieces used by the solver -----------------------------------------


def rect_factor(m: int, n: int) -> RF:
    """b of the full rectangle (m^N), i.e. J_0(a+m)/J_0(a)."""
    out = ONE
    for i in range(1, n + 1):
        for j in range(m):
            out = out * (A + j + (n - i) * RHO) / (A + B + j + (2 * n - i - 1) * RHO)
    return out


def column_b(ell: int, n: int) -> RF:
    out = ONE
    for i in range(1, ell + 1):
        out = out * (A + (n - i) * RHO) / (A + B + (2 * n - i - 1) * RHO)
    return out


def _cache_key(n: int, mu: Partition) -> str:
    return f"{n}|{format_partition(mu)}"


def serialize_rf(f: RF) -> str:
    """Expanded canonical ``(num) / (den)`` used by the cache file."""
    return f"({f.num}) / ({f.den})"


class ResultCache:
    """Persistent map ``"N|parts" -> serialized RF`` stored as JSON.

    Purely advisory: it only saves recomputation.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)
        self.entries: dict[str, str] = {}
        if os.path.exists(self.path):
            with open(self.path, encoding="utf-8") as fh:
                data = json.load(fh)
            if not isinstance(data, dict):
                raise ValueError(f"cache file {self.path} is not a JSON object")
            self.entries = {str(k): str(v) for k, v in data.items()}
        self._dirty = False

    def lookup(self, n: int, mu: Partition) -> RF | None:
        text = self.entries.get(_cache_key(n, mu))
        return parse_rf(text) if text is not None else None

    def store(self, n: int, mu: Partition, value: RF) -> None:
        key = _cache_key(n, mu)
        text = serialize_rf(value)
        if self.entries.get(key) != text:
            self.entries[key] = text
            self._dirty = True

    def save(self) -> None:
        if not self._dirty:
            return
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".selberg-cache-")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(self.entries, fh, indent=0, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, self.path)
        except BaseException:
            os.unlink(tmp)
            raise
        self._dirty = False

    def summary(self) -> dict:
        ns: dict[int, int] = {}
        max_w = 0
        for key in self.entries:
            n_text, _, parts = key.partition("|")
            ns[int(n_text)] = ns.get(int(n_text), 0) + 1
            max_w = max(max_w, weight(parse_partition(parts)))
        return {"entries": len(self.entries), "per_N": dict(sorted(ns.items())), "max_weight": max_w}


@dataclass
class Theorem8Report:
    lam: Partition
    n: int
    results: dict[int, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())


class SelbergEngine:
    """Memoized solver for b_mu = B_mu / J_0 at a fixed number of variables.

    The memo is guarded by a re-entrant lock, so one engine can be shared
    between threads; calls are serialized and give the sequential result.
    """

    def __init__(self, n: int, cache: ResultCache | None = None):
        if n < 1:
            raise ValueError("N must be a positive integer")
        self.n = n
        self.cache = cache
        self._memo: dict[Partition, RF] = {(): ONE}
        self._lock = threading.RLock()

    def b(self, mu: Sequence[int]) -> RF:
        mu = canonical(mu)
        if length(mu) > self.n:
            raise PartitionError(f"length of {mu} exceeds N={self.n}")
        with self._lock:
            return self._b(mu)

    def _b(self, mu: Partition) -> RF:
        hit = self._memo.get(mu)
        if hit is not None:
            return hit
        if self.cache is not None:
            hit = self.cache.lookup(self.n, mu)
            if hit is not None:
                self._memo[mu] = hit
                return hit
        value = self._solve(mu)
        self._memo[mu] = value
        if self.cache is not None:
            self.cache.store(self.n, mu, value)
        return value

    def _solve(self, mu: Partition) -> RF:
        n = self.n
        if len(mu) == n:
            # y^mu = (y_1...y_N)^m y^(mu - m): absorbed into the kernel as a -> a + m
            m = mu[-1]
            rest = tuple(p - m for p in mu if p > m)
            return rect_factor(m, n) * self._b(rest).shift_a(m)
        if mu[0] == 1:
            return column_b(len(mu), n)
        lam = (mu[0] + 1,) + mu[1:]
        comb = corollary10_comb(lam, n)
        lead = comb.coeff(mu)
        self._check_lead(mu, lead)
        rest = ZERO
        for nu, c in sorted(comb.items()):
            if nu == mu:
                continue
            if not (weight(nu) < weight(mu) or (weight(nu) == weight(mu) and dominates(nu, mu))):
                raise EngineInvariantError(f"side term {nu} is not below {mu} (N={n})")
            rest = rest + c * self._b(nu)
        return -rest / lead

    def _check_lead(self, mu: Partition, lead: RF) -> None:
        if lead.is_zero():
            raise EngineInvariantError(f"zero coefficient for {mu} (N={self.n})")
        # expected shape: a + b + mu_1 - 1 + (non-negative integer) * rho
        extra = ((lead - (A + B + mu[0] - 1)) / RHO).as_fraction()
        if extra is None or extra < 0 or extra.denominator != 1:
            raise EngineInvariantError(f"unexpected leading coefficient {lead} for {mu}")

    def schur(self, lam: Sequence[int]) -> RF:
        """J_lam / J_0 assembled from the Kostka row of lam."""
        lam = canonical(lam)
        if length(lam) > self.n:
            raise PartitionError(f"length of {lam} exceeds N={self.n}")
        total = ZERO
        for mu, k in sorted(kostka_row(lam).items()):
            if length(mu) > self.n:
                continue
            total = total + self.b(mu) * (k * monomial_count(mu, self.n))
        return total

    def residual(self, comb: LinearComb) -> RF:
        return comb.substitute(self.b)

    def verify_theorem8(self, lam: Sequence[int]) -> Theorem8Report:
        lam = canonical(lam)
        report = Theorem8Report(lam, self.n)
        for c in range(1, lam[0]):
            report.results[c] = self.residual(theorem8_comb(lam, self.n, c)).is_zero()
        return report

    def known(self) -> Iterable[Partition]:
        return list(self._memo)


_ENGINES: dict[int, SelbergEngine] = {}
_ENGINES_LOCK = threading.Lock()


def engine_for(n: int) -> SelbergEngine:
    """Process-wide shared engine for N (no persistent cache attached)."""
    with _ENGINES_LOCK:
        eng = _ENGINES.get(n)
        if eng is None:
            eng = _ENGINES[n] = SelbergEngine(n)
        return eng


def compute_b(mu: Sequence[int], n: int) -> RF:
    return engine_for(n).b(mu)


def compute_schur(lam: Sequence[int], n: int) -> RF:
    return engine_for(n).schur(lam)


def verify_theorem8(lam: Sequence[int], n: int) -> Theorem8Report:
    return engine_for(n).verify_theorem8(lam)
