"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (exported as ``Rational``). Matrices
and subspaces are immutable; subspaces are stored by a basis and their
constraint systems are derived on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, PreconditionError

Rational = Fraction
Vector = tuple  # tuple of Fraction


def as_rational(value) -> Fraction:
    """Parse an int, Fraction or token such as ``"3/4"`` into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def as_vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def integer_row(v: Sequence) -> list[int]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major exact matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatchError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RationalMatrix":
        entries = tuple(as_vector(r) for r in rows)
        if cols is None:
            if not entries:
                raise PreconditionError("column count required for an empty matrix")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls.from_rows([[0] * cols for _ in range(rows)], cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError("vector length does not match column count")
        return tuple(dot(r, v) for r in self.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        cols_of_other = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return RationalMatrix(
            self.rows,
            other.cols,
            tuple(tuple(dot(r, c) for c in cols_of_other) for r in self.entries),
        )

    def row_space(self) -> "Subspace":
        return Subspace.span(self.cols, self.entries)

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(str(x) for x in r) for r in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RationalMatrix":
        """Parse ``rows cols`` followed by row-major ``p/q`` or integer tokens."""
        tokens = text.split()
        if len(tokens) < 2:
            raise PreconditionError("matrix text needs a 'rows cols' header")
        rows, cols = int(tokens[0]), int(tokens[1])
        body = tokens[2:]
        if len(body) != rows * cols:
            raise PreconditionError(f"expected {rows * cols} entries, found {len(body)}")
        vals = [as_rational(t) for t in body]
        return cls.from_rows([vals[i * cols:(i + 1) * cols] for i in range(rows)], cols)


def rref(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (nonzero rows, pivots)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_of_rows(rows: Sequence[Sequence]) -> int:
    rows = [r for r in rows]
    if not rows or not len(rows[0]):
        return 0
    return kernels.int_rank([integer_row(r) for r in rows])


def rank(m: RationalMatrix) -> int:
    """Exact rank via fraction-free elimination on integer-rescaled rows."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return rank_of_rows(m.entries)


def _null_space(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n given by a basis of independent vectors."""

    ambient_dim: int
    basis: tuple

    def __post_init__(self):
        if any(len(v) != self.ambient_dim for v in self.basis):
            raise DimensionMismatchError("basis vector length differs from ambient dimension")
        if len(self.basis) > self.ambient_dim or rank_of_rows(self.basis) != len(self.basis):
            raise PreconditionError("basis vectors are linearly dependent")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [as_vector(v) for v in vectors]
        red, _ = rref(vecs, ambient_dim) if vecs else ([], [])
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def constraints(self) -> tuple:
        """Basis of the orthogonal complement: ``x`` lies in the subspace iff all vanish."""
        return tuple(_null_space(self.basis, self.ambient_dim))

    @cached_property
    def canonical(self) -> tuple:
        """Order-independent identity: the RREF of the basis."""
        red, _ = rref(self.basis, self.ambient_dim) if self.basis else ([], [])
        return tuple(tuple(r) for r in red)

    def contains(self, v: Sequence) -> bool:
        return all(dot(c, v) == 0 for c in self.constraints)

    def same_as(self, other: "Subspace") -> bool:
        return self.ambient_dim == other.ambient_dim and self.canonical == other.canonical

    def coordinates(self) -> RationalMatrix:
        """The n x dim matrix whose columns are the basis vectors."""
        return RationalMatrix.from_rows(zip(*self.basis), self.dim) if self.dim else (
            RationalMatrix.zeros(self.ambient_dim, 0))


def kernel(m: RationalMatrix) -> Subspace:
    """Null space ``{v : m v = 0}``."""
    return Subspace(m.cols, tuple(_null_space(m.entries, m.cols)))


def orthogonal_complement(s: Subspace) -> Subspace:
    return Subspace(s.ambient_dim, s.constraints)


def _check_same_space(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def intersection(a: Subspace, b: Subspace) -> Subspace:
    """``a ∩ b`` as the kernel of the stacked constraint systems."""
    _check_same_space(a, b)
    rows = list(a.constraints) + list(b.constraints)
    return Subspace(a.ambient_dim, tuple(_null_space(rows, a.ambient_dim)))


def intersection_dim(a: Subspace, b: Subspace) -> int:
    _check_same_space(a, b)
    if a.dim == 0 or b.dim == 0:
        return 0
    return a.dim + b.dim - rank_of_rows(list(a.basis) + list(b.basis))


def random_rational_matrix(rows: int, cols: int, seed: int, magnitude: int) -> RationalMatrix:
    """Integer matrix with entries uniform in ``[-magnitude, magnitude]``."""
    if magnitude < 1:
        raise PreconditionError("magnitude must be at least 1")
    rng = np.random.default_rng(seed)
    vals = rng.integers(-magnitude, magnitude, size=(rows, cols), endpoint=True)
    return RationalMatrix.from_rows(vals.tolist(), cols)
