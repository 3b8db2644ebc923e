from math import factorial

from hypothesis import given, strategies as st

from beltpoly.combinatorics import (
    count_ordered_partitions,
    count_signed_ordered_partitions,
    enumerate_ordered_partitions,
    enumerate_signed_ordered_partitions,
    stirling1,
    stirling1_b,
    stirling1_b_row,
    stirling1_row,
    stirling2,
    stirling2_b,
)


def test_stirling1_examples():
    assert stirling1(3, 2) == 3
    assert stirling1(4, 2) == 11
    assert stirling1(0, 0) == 1
    assert stirling1(5, -1) == 0
    assert stirling1_row(3) == (0, 2, 3, 1)


def test_stirling2_examples():
    assert stirling2(3, 2) == 3
    assert stirling2(4, 2) == 7
    assert all(stirling2(n, n) == 1 for n in range(8))
    assert stirling2(3, 4) == 0


def test_stirling_b_examples():
    assert stirling1_b(2, 1) == 4
    assert stirling1_b_row(3) == (15, 23, 9, 1)
    assert all(stirling1_b(n, n) == 1 for n in range(7))
    assert stirling2_b(2, 1) == 4
    assert stirling2_b(3, 1) == 13
    assert stirling2_b(3, 2) == 9
    assert stirling2_b(2, 0) == 1


def test_ordered_partition_examples():
    two = [p.blocks for p in enumerate_ordered_partitions(2, 2)]
    assert two == [((1,), (2,)), ((2,), (1,))]
    assert [p.blocks for p in enumerate_ordered_partitions(3, 1)] == [((1, 2, 3),)]
    assert len(list(enumerate_ordered_partitions(4, 2))) == 14
    assert list(enumerate_ordered_partitions(3, 0)) == []
    assert list(enumerate_ordered_partitions(3, 4)) == []


def test_signed_partition_examples():
    assert len(list(enumerate_signed_ordered_partitions(1, 1))) == 2
    assert len(list(enumerate_signed_ordered_partitions(2, 1))) == 8
    only = list(enumerate_signed_ordered_partitions(3, 0))
    assert len(only) == 1 and only[0].zero_block == (1, 2, 3) and only[0].blocks == ()


def test_ordered_partitions_lexicographic():
    words = [p.word() for p in enumerate_ordered_partitions(4, 3)]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


ns = st.integers(1, 9)


@given(ns, st.integers(1, 9))
def test_stirling1_recurrence(n, k):
    # independent check of the expansion: c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
    assert stirling1(n, k) == stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@given(ns, st.integers(1, 9))
def test_stirling2_recurrence(n, k):
    assert stirling2(n, k) == stirling2(n - 1, k - 1) + k * stirling2(n - 1, k)


@given(ns, st.integers(0, 9))
def test_stirling1_b_recurrence(n, k):
    # row n is row n-1 times (t + 2n - 1)
    assert stirling1_b(n, k) == stirling1_b(n - 1, k - 1) + (2 * n - 1) * stirling1_b(n - 1, k)


@given(ns, st.integers(0, 9))
def test_stirling2_b_recurrence(n, k):
    # type-B set partitions: add n to a signed block (2k ways), to the zero block, or open a block
    assert stirling2_b(n, k) == stirling2_b(n - 1, k - 1) + (2 * k + 1) * stirling2_b(n - 1, k)


@given(st.integers(0, 10))
def test_row_sums(n):
    assert sum(stirling1(n, k) for k in range(n + 1)) == factorial(n)
    # (t+1)(t+3)...(t+2n-1) at t=1 is 2^n n!
    assert sum(stirling1_b(n, k) for k in range(n + 1)) == 2 ** n * factorial(n)


@given(st.integers(2, 10))
def test_alternating_halves(n):
    # chi(-1) vanishes for the factor t; the even and odd parts agree
    row = stirling1_row(n)
    assert sum(row[0::2]) == sum(row[1::2])


@given(st.integers(1, 5), st.integers(0, 5))
def test_partition_stream_counts(n, j):
    parts = list(enumerate_ordered_partitions(n, j))
    assert len(parts) == count_ordered_partitions(n, j) == (factorial(j) * stirling2(n, j) if j else 0)
    for p in parts:
        assert p.num_blocks == j
        assert sorted(x for b in p.blocks for x in b) == list(range(1, n + 1))


@given(st.integers(1, 4), st.integers(0, 4))
def test_signed_stream_counts(n, j):
    parts = list(enumerate_signed_ordered_partitions(n, j))
    expected = 2 ** j * factorial(j) * stirling2_b(n, j) if j <= n else 0
    assert len(parts) == count_signed_ordered_partitions(n, j) == expected
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert p.num_blocks == j
        assert all((s == 0) == (i in p.zero_block) for i, s in enumerate(p.signs, start=1))
