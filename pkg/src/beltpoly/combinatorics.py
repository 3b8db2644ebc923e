"""Stirling numbers of types A and B and (signed) ordered set partitions.

Stirling numbers are read off their defining polynomials or sums; tables of
recurrences are left to the tests as an independent check. Elements of
partitions are labelled ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

binomial = comb


def _poly_mul_linear(poly: list[int], c: int) -> list[int]:
    """Multiply ``sum poly[k] t^k`` by ``(t + c)``."""
    out = [0] * (len(poly) + 1)
    for k, a in enumerate(poly):
        out[k] += c * a
        out[k + 1] += a
    return out


@lru_cache(maxsize=None)
def stirling1_row(n: int) -> tuple[int, ...]:
    """Coefficients of t(t+1)...(t+n-1), indexed by the power of t."""
    poly = [1]
    for i in range(n):
        poly = _poly_mul_linear(poly, i)
    return tuple(poly)


@lru_cache(maxsize=None)
def stirling1_b_row(n: int) -> tuple[int, ...]:
    """Coefficients of (t+1)(t+3)...(t+2n-1)."""
    poly = [1]
    for i in range(n):
        poly = _poly_mul_linear(poly, 2 * i + 1)
    return tuple(poly)


def stirling1(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return stirling1_row(n)[k]


def stirling1_b(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return stirling1_b_row(n)[k]


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k non-empty blocks."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    total = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1))
    return total // factorial(k)


@lru_cache(maxsize=None)
def stirling2_b(n: int, k: int) -> int:
    """Type-B analogue: sum over m of 2^(m-k) C(n,m) S(m,k)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return sum(2 ** (m - k) * comb(n, m) * stirling2(m, k) for m in range(k, n + 1))


@dataclass(frozen=True)
class OrderedPartition:
    """Ordered partition (B_1, ..., B_j) of {1..n}; blocks are sorted tuples."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = [x for b in self.blocks for x in b]
        if any(not b for b in self.blocks):
            raise ValueError("blocks must be non-empty")
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError("blocks must partition {1..n}")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def word(self) -> tuple[int, ...]:
        """Block index of each element 1..n."""
        w = [0] * self.n
        for k, b in enumerate(self.blocks):
            for x in b:
                w[x - 1] = k
        return tuple(w)

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class SignedOrderedPartition:
    """Pair (B, eta): signed blocks B_1..B_j, a zero block, and signs on the signed blocks.

    ``signs`` has length n with entries +1/-1 on signed elements and 0 on the
    zero block.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    zero_block: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise ValueError("signed blocks must be non-empty")
        seen = [x for b in self.blocks for x in b] + list(self.zero_block)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError("blocks and zero block must partition {1..n}")
        if len(self.signs) != self.n:
            raise ValueError("need one sign slot per element")
        zero = set(self.zero_block)
        for i, s in enumerate(self.signs, start=1):
            if (i in zero) != (s == 0) or s not in (-1, 0, 1):
                raise ValueError("signs must be +-1 exactly off the zero block")

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "zero_block": list(self.zero_block),
            "signs": list(self.signs),
        }


def _surjective_words(n: int, j: int) -> Iterator[list[int]]:
    """Words in {0..j-1}^n using every letter, in lexicographic order."""
    word = [0] * n
    used = [0] * j

    def rec(pos: int, missing: int):
        if pos == n:
            yield word
            return
        slack = n - pos - missing
        for v in range(j):
            if used[v] == 0:
                new_missing = missing - 1
            else:
                if slack == 0:
                    continue
                new_missing = missing
            word[pos] = v
            used[v] += 1
            yield from rec(pos + 1, new_missing)
            used[v] -= 1

    yield from rec(0, j)


def _blocks_from_word(word, j: int) -> tuple[tuple[int, ...], ...]:
    blocks: list[list[int]] = [[] for _ in range(j)]
    for i, v in enumerate(word, start=1):
        if v < j:
            blocks[v].append(i)
    return tuple(tuple(b) for b in blocks)


def enumerate_ordered_partitions(n: int, j: int) -> Iterator[OrderedPartition]:
    """Each ordered partition of {1..n} into j blocks, once, lexicographic by word."""
    if not 1 <= j <= n:
        return
    for word in _surjective_words(n, j):
        yield OrderedPartition(n, _blocks_from_word(word, j))


def _signed_words(n: int, j: int) -> Iterator[list[int]]:
    """Words in {0..j}^n using each of 0..j-1; letter j marks the zero block."""
    word = [0] * n
    used = [0] * j

    def rec(pos: int, missing: int):
        if pos == n:
            yield word
            return
        slack = n - pos - missing
        for v in range(j + 1):
            if v < j and used[v] == 0:
                new_missing = missing - 1
            else:
                if slack == 0:
                    continue
                new_missing = missing
            word[pos] = v
            if v < j:
                used[v] += 1
            yield from rec(pos + 1, new_missing)
            if v < j:
                used[v] -= 1

    yield from rec(0, j)


def _sign_patterns(k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for head in (1, -1):
        for tail in _sign_patterns(k - 1):
            yield (head,) + tail


def enumerate_signed_ordered_partitions(n: int, j: int) -> Iterator[SignedOrderedPartition]:
    """Each pair (B, eta) with j signed blocks, once.

    Ordered by block-assignment word, then by sign pattern with + before -.
    """
    if not 0 <= j <= n:
        return
    for word in _signed_words(n, j):
        blocks = _blocks_from_word(word, j)
        zero = tuple(i for i, v in enumerate(word, start=1) if v == j)
        signed = [i for i, v in enumerate(word) if v < j]
        for pattern in _sign_patterns(len(signed)):
            signs = [0] * n
            for i, s in zip(signed, pattern):
                signs[i] = s
            yield SignedOrderedPartition(n, blocks, zero, tuple(signs))


def count_ordered_partitions(n: int, j: int) -> int:
    return factorial(j) * stirling2(n, j) if 1 <= j <= n else 0


def count_signed_ordered_partitions(n: int, j: int) -> int:
    return 2 ** j * factorial(j) * stirling2_b(n, j) if 0 <= j <= n else 0
