"""Integer partitions.

Partitions are plain tuples of positive integers in weakly decreasing
order with no trailing zeros.  Operations that need an N-tuple pad with
zeros internally; results are always returned in canonical form.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]

_EXP_TOKEN = re.compile(r"^(\d+)\^(\d+)$")
_INT_TOKEN = re.compile(r"^\d+$")


class PartitionError(ValueError):
    """Raised for malformed partitions or violated length/weight preconditions."""


def canonical(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and strip trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for p in parts:
        if p < 0:
            raise PartitionError(f"negative part in {parts}")
    for x, y in zip(parts, parts[1:]):
        if x < y:
            raise PartitionError(f"parts are not weakly decreasing: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"``, ``"3 1 1"`` or exponent form ``"2^3 1^2"``.

    The empty string (or ``"0"``) is the empty partition.
    """
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    parts: list[int] = []
    for tok in tokens:
        m = _EXP_TOKEN.match(tok)
        if m:
            parts.extend([int(m.group(1))] * int(m.group(2)))
        elif _INT_TOKEN.match(tok):
            parts.append(int(tok))
        else:
            raise PartitionError(f"malformed partition token {tok!r}")
    return canonical(parts)


def format_partition(lam: Sequence[int]) -> str:
    """List form used by the CLI and the cache keys, e.g. ``"2,1,1"``."""
    return ",".join(str(p) for p in lam)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p > 0)


def pad(lam: Sequence[int], n: int) -> list[int]:
    if length(lam) > n:
        raise PartitionError(f"length of {tuple(lam)} exceeds N={n}")
    out = [p for p in lam if p > 0]
    return out + [0] * (n - len(out))


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def dominates(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` is below ``lam`` in dominance order (mu ⪯ lam)."""
    if weight(mu) != weight(lam):
        raise PartitionError(f"weight mismatch: {tuple(mu)} vs {tuple(lam)}")
    return prefix_dominated(mu, lam)


def prefix_dominated(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Prefix-sum comparison without the equal-weight requirement.

    Both sequences are implicitly padded with zeros, so a lighter ``mu``
    can be dominated by a heavier ``lam``.
    """
    n = max(len(mu), len(lam))
    s_mu = s_lam = 0
    for i in range(n):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def ordered_partner(v: Iterable[int]) -> Partition:
    """Sort an integer vector decreasingly and drop the zeros."""
    v = tuple(v)
    if any(x < 0 for x in v):
        raise PartitionError(f"negative entry in {v}")
    return tuple(sorted((x for x in v if x), reverse=True))


def shift(lam: Sequence[int], n: int, deltas: Iterable[tuple[int, int]]) -> Partition:
    """Ordered partner of ``lam`` (padded to length n) plus the given deltas.

    ``deltas`` holds ``(index, delta)`` pairs with 1-based indices, so
    ``shift(lam, n, [(1, -1), (k, 1)])`` is ``[lam - e_1 + e_k]``.
    """
    v = pad(lam, n)
    for idx, delta in deltas:
        if not 1 <= idx <= n:
            raise PartitionError(f"index {idx} outside 1..{n}")
        v[idx - 1] += delta
    return ordered_partner(v)


def partition_stats(lam: Sequence[int]) -> tuple[int, int, int, dict[int, int]]:
    """Return ``(weight, length, greatest part, multiplicities)``."""
    conj = conjugate(lam)
    n = lam[0] if lam else 0
    mult = {k: conj[k - 1] - (conj[k] if k < n else 0) for k in range(1, n + 1)}
    return weight(lam), (conj[0] if conj else 0), n, mult


def monomial_count(mu: Sequence[int], n: int) -> int:
    """m_mu(1^N): the number of distinct monomials of m_mu in N variables."""
    ell = length(mu)
    if ell > n:
        raise PartitionError(f"length of {tuple(mu)} exceeds N={n}")
    denom = math.factorial(n - ell)
    for m in Counter(p for p in mu if p).values():
        denom *= math.factorial(m)
    return math.factorial(n) // denom


def schur_dim(lam: Sequence[int], n: int) -> int:
    """s_lam(1^N) via the hook-content style product over pairs i<j."""
    v = pad(lam, n)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= v[i] - v[j] + j - i
            den *= j - i
    return num // den


@lru_cache(maxsize=None)
def partitions_of(total: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(max_weight: int, max_length: int | None = None) -> Iterator[Partition]:
    """Every partition of weight <= max_weight (optionally with bounded length)."""
    for w in range(max_weight + 1):
        for lam in partitions_of(w):
            if max_length is None or len(lam) <= max_length:
                yield lam
