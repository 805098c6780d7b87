import itertools

import pytest

from oracles import distinct_permutations, ssyt_count
from selberg.partition import (
    PartitionError,
    conjugate,
    dominates,
    monomial_count,
    ordered_partner,
    parse_partition,
    partition_stats,
    partitions_of,
    partitions_up_to,
    schur_dim,
    shift,
)


@pytest.mark.parametrize("text, expected", [
    ("3,1,1", (3, 1, 1)),
    ("2^3 1^2", (2, 2, 2, 1, 1)),
    ("", ()),
    ("3 1", (3, 1)),
    ("4,2,0,0", (4, 2)),
])
def test_parse(text, expected):
    assert parse_partition(text) == expected


@pytest.mark.parametrize("text", ["1,3", "2,-1", "x", "2^a", "1^2 2"])
def test_parse_rejects(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


@pytest.mark.parametrize("lam, conj", [((3, 1), (2, 1, 1)), ((), ()), ((2, 2, 1), (3, 2))])
def test_conjugate(lam, conj):
    assert conjugate(lam) == conj


def test_dominates_examples():
    assert dominates((1, 1, 1), (3,))
    assert dominates((2, 2), (3, 1))
    assert not dominates((3, 1), (2, 2))
    with pytest.raises(PartitionError):
        dominates((2,), (1,))


@pytest.mark.parametrize("v, expected", [((0, 1, 3), (3, 1)), ((2, 2), (2, 2)), ((1, 0, 2), (2, 1))])
def test_ordered_partner(v, expected):
    assert ordered_partner(v) == expected


def test_shift():
    assert shift((3,), 3, [(1, -2)]) == (1,)
    assert shift((2, 1), 3, [(1, -2), (3, 1)]) == (1, 1)
    with pytest.raises(PartitionError):
        shift((2,), 2, [(1, -3)])
    with pytest.raises(PartitionError):
        shift((2,), 2, [(3, 1)])


def test_partition_stats():
    assert partition_stats((2, 2, 1)) == (5, 3, 2, {2: 2, 1: 1})
    assert partition_stats(()) == (0, 0, 0, {})
    assert partition_stats((3, 1)) == (4, 2, 3, {3: 1, 2: 0, 1: 1})


def test_counts_examples():
    for n in range(1, 6):
        assert monomial_count((1,), n) == n
        assert schur_dim((1,), n) == n
    assert monomial_count((2, 1), 3) == distinct_permutations((2, 1, 0)) == 6
    assert monomial_count((1, 1), 2) == 1
    assert schur_dim((2,), 2) == 3
    assert schur_dim((1, 1), 2) == 1
    with pytest.raises(PartitionError):
        monomial_count((1, 1, 1), 2)
    with pytest.raises(PartitionError):
        schur_dim((1, 1, 1), 2)


def test_partitions_of_counts():
    assert [len(partitions_of(w)) for w in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_conjugate_involution():
    for lam in partitions_up_to(10):
        assert conjugate(conjugate(lam)) == lam


def test_dominance_is_partial_order_and_reversed_by_conjugation():
    for w in range(9):
        ps = partitions_of(w)
        for x in ps:
            assert dominates(x, x)
        for x, y in itertools.product(ps, repeat=2):
            if x != y and dominates(x, y):
                assert not dominates(y, x)
            assert dominates(x, y) == dominates(conjugate(y), conjugate(x))
        for x, y, z in itertools.product(ps, repeat=3):
            if dominates(x, y) and dominates(y, z):
                assert dominates(x, z)


def test_monomial_count_matches_permutations():
    for n in range(1, 7):
        for mu in partitions_up_to(6, n):
            assert monomial_count(mu, n) == distinct_permutations(tuple(mu) + (0,) * (n - len(mu)))


def test_schur_dim_matches_ssyt_enumeration():
    for n in range(1, 6):
        for lam in partitions_up_to(6, n):
            assert schur_dim(lam, n) == ssyt_count(lam, n)


def test_empty_shift_is_identity():
    for n in range(1, 6):
        for lam in partitions_up_to(7, n):
            assert shift(lam, n, []) == lam
