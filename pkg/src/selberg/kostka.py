"""Kostka numbers by semistandard tableau enumeration."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .partition import Partition, PartitionError, canonical, dominates, partitions_of, weight


def _horizontal_strips(shape: Partition, size: int) -> Iterator[Partition]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes.

    Row i can grow up to the length of row i-1 of the *old* shape, which is
    exactly the condition that the new boxes share no column.
    """
    rows = list(shape) + [0]

    def grow(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(rows):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            acc.append(rows[i] + add)
            yield from grow(i + 1, left - add, acc)
            acc.pop()

    yield from grow(0, size, [])


def _contained(inner: Sequence[int], outer: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(x <= y for x, y in zip(inner, outer))


@lru_cache(maxsize=None)
def _count(lam: Partition, content: Partition) -> int:
    # Place the letters 1, 2, ... in turn; the boxes holding letter v form a
    # horizontal strip, and every completed chain is one tableau.
    def place(shape: Partition, v: int) -> int:
        if v == len(content):
            return int(shape == lam)
        return sum(
            place(nxt, v + 1)
            for nxt in _horizontal_strips(shape, content[v])
            if _contained(nxt, lam)
        )

    return place((), 0)


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` and content ``mu``."""
    lam, mu = canonical(lam), canonical(mu)
    if weight(lam) != weight(mu):
        raise PartitionError(f"weight mismatch: {lam} vs {mu}")
    return _count(lam, mu)


@lru_cache(maxsize=None)
def _row(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for mu in partitions_of(weight(lam)):
        if dominates(mu, lam):
            k = _count(lam, mu)
            if k:
                out.append((mu, k))
    return tuple(out)


def kostka_row(lam: Sequence[int]) -> dict[Partition, int]:
    """All nonzero K_{lam,mu}, keyed by mu (every key satisfies mu ⪯ lam)."""
    return dict(_row(canonical(lam)))
