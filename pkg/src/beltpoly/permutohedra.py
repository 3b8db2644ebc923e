"""Permutohedra of types A and B.

Faces are indexed combinatorially: a j-face of P_n^A by an ordered partition
into n - j blocks, a j-face of P_n^B by a signed ordered partition with n - j
signed blocks. Vertices are realized only on request.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence, Union

from .combinatorics import (
    OrderedPartition,
    SignedOrderedPartition,
    enumerate_ordered_partitions,
    enumerate_signed_ordered_partitions,
    stirling2,
    stirling2_b,
)
from .cones import HCone, weyl_face_cone_a, weyl_face_cone_b
from .errors import DimensionMismatchError, NotAZonotopeError, PreconditionError
from .exact_linalg import as_vector


@dataclass(frozen=True)
class PermutohedronA:
    """conv of all coordinate permutations of x, with x strictly decreasing."""

    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", as_vector(self.x))
        if not self.x:
            raise PreconditionError("need at least one coordinate")
        if any(a <= b for a, b in zip(self.x, self.x[1:])):
            raise PreconditionError("x must be strictly decreasing")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def dim(self) -> int:
        return self.n - 1

    kind = "A"


@dataclass(frozen=True)
class PermutohedronB:
    """conv of all signed coordinate permutations of x, with x_1 > ... > x_n > 0."""

    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", as_vector(self.x))
        if not self.x:
            raise PreconditionError("need at least one coordinate")
        if any(a <= b for a, b in zip(self.x, self.x[1:])) or self.x[-1] <= 0:
            raise PreconditionError("x must be strictly decreasing and positive")

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def dim(self) -> int:
        return self.n

    kind = "B"


Permutohedron = Union[PermutohedronA, PermutohedronB]


@dataclass(frozen=True)
class FaceDescriptor:
    """A face given by its (signed) ordered partition."""

    kind: str
    partition: Union[OrderedPartition, SignedOrderedPartition]
    dim: int
    vertex_count: int

    def to_json(self) -> dict:
        out = {"kind": self.kind, "dim": self.dim, "vertex_count": self.vertex_count}
        out.update(self.partition.to_json())
        return out


def _check_len(p: Permutohedron, t: Sequence) -> tuple:
    if len(t) != p.n:
        raise DimensionMismatchError("point length differs from n")
    return as_vector(t)


def contains_a(p: PermutohedronA, t: Sequence) -> bool:
    """Rado's criterion, using the sorted partial sums."""
    t = _check_len(p, t)
    if sum(t) != sum(p.x):
        return False
    ts = sorted(t, reverse=True)
    acc_t = acc_x = Fraction(0)
    for a, b in zip(ts, p.x):
        acc_t += a
        acc_x += b
        if acc_t > acc_x:
            return False
    return True


def contains_b(p: PermutohedronB, t: Sequence) -> bool:
    """Rado's criterion for absolute values."""
    t = _check_len(p, t)
    ts = sorted((abs(v) for v in t), reverse=True)
    acc_t = acc_x = Fraction(0)
    for a, b in zip(ts, p.x):
        acc_t += a
        acc_x += b
        if acc_t > acc_x:
            return False
    return True


def contains(p: Permutohedron, t: Sequence) -> bool:
    return contains_a(p, t) if p.kind == "A" else contains_b(p, t)


def _descriptor_a(p: PermutohedronA, part: OrderedPartition) -> FaceDescriptor:
    count = 1
    for b in part.blocks:
        count *= factorial(len(b))
    return FaceDescriptor("A", part, p.n - part.num_blocks, count)


def _descriptor_b(p: PermutohedronB, part: SignedOrderedPartition) -> FaceDescriptor:
    count = factorial(len(part.zero_block)) * 2 ** len(part.zero_block)
    for b in part.blocks:
        count *= factorial(len(b))
    return FaceDescriptor("B", part, p.n - part.num_blocks, count)


def face_vertices(p: Permutohedron, f: FaceDescriptor) -> list[tuple]:
    """Vertices of the face, in a deterministic order."""
    _check_owner(p, f)
    part = f.partition
    groups: list[tuple[tuple[int, ...], list]] = []
    pos = 0
    for b in part.blocks:
        groups.append((b, list(p.x[pos:pos + len(b)])))
        pos += len(b)
    zero = part.zero_block if f.kind == "B" else ()
    if zero:
        groups.append((zero, list(p.x[pos:])))
    choices = []
    for idx, (block, vals) in enumerate(groups):
        options = []
        for perm in permutations(vals):
            if f.kind == "B" and block == zero and idx == len(groups) - 1:
                for signs in product((1, -1), repeat=len(block)):
                    options.append([(i, s * v) for i, s, v in zip(block, signs, perm)])
            elif f.kind == "B":
                options.append([(i, part.signs[i - 1] * v) for i, v in zip(block, perm)])
            else:
                options.append(list(zip(block, perm)))
        choices.append(options)
    out = []
    for combo in product(*choices):
        v = [Fraction(0)] * p.n
        for assignment in combo:
            for i, val in assignment:
                v[i - 1] = val
        out.append(tuple(v))
    return out


def enumerate_faces_a(p: PermutohedronA, j: int, vertices: bool = False) -> Iterator:
    """One item per j-face: the descriptor, or (descriptor, vertices)."""
    if not 0 <= j <= p.n - 1:
        raise PreconditionError(f"face dimension must lie in [0, {p.n - 1}]")
    for part in enumerate_ordered_partitions(p.n, p.n - j):
        f = _descriptor_a(p, part)
        yield (f, face_vertices(p, f)) if vertices else f


def enumerate_faces_b(p: PermutohedronB, j: int, vertices: bool = False) -> Iterator:
    """One item per j-face; j = n gives the polytope itself (no signed blocks)."""
    if not 0 <= j <= p.n:
        raise PreconditionError(f"face dimension must lie in [0, {p.n}]")
    for part in enumerate_signed_ordered_partitions(p.n, p.n - j):
        f = _descriptor_b(p, part)
        yield (f, face_vertices(p, f)) if vertices else f


def enumerate_faces(p: Permutohedron, j: int, vertices: bool = False) -> Iterator:
    return enumerate_faces_a(p, j, vertices) if p.kind == "A" else enumerate_faces_b(p, j, vertices)


def face_vector_a(n: int) -> list[int]:
    return [factorial(n - j) * stirling2(n, n - j) for j in range(n)]


def face_vector_b(n: int) -> list[int]:
    return [2 ** (n - j) * factorial(n - j) * stirling2_b(n, n - j) for j in range(n + 1)]


def face_vector(p: Permutohedron) -> list[int]:
    """f_0, ..., f_dim by closed form; the last entry is the polytope itself."""
    return face_vector_a(p.n) if p.kind == "A" else face_vector_b(p.n)


def _check_owner(p: Permutohedron, f: FaceDescriptor) -> None:
    if f.kind != p.kind or f.partition.n != p.n:
        raise PreconditionError("face descriptor does not belong to this permutohedron")


def normal_cone(p: Permutohedron, f: FaceDescriptor) -> HCone:
    _check_owner(p, f)
    return weyl_face_cone_a(f.partition) if p.kind == "A" else weyl_face_cone_b(f.partition)


def tangent_cone(p: Permutohedron, f: FaceDescriptor) -> HCone:
    """Feasible directions at a relative-interior point of the face."""
    _check_owner(p, f)
    n = p.n
    part = f.partition
    ineqs = []
    prefix = [0] * n
    if p.kind == "A":
        for block in part.blocks[:-1]:
            for i in block:
                prefix[i - 1] = 1
            ineqs.append(list(prefix))
        return HCone.make(n, [[1] * n], ineqs)
    for block in part.blocks:
        for i in block:
            prefix[i - 1] = part.signs[i - 1]
        ineqs.append(list(prefix))
    return HCone.make(n, [], ineqs)


def is_arithmetic_progression(x: Sequence) -> bool:
    x = as_vector(x)
    return all(x[i] - x[i + 1] == x[0] - x[1] for i in range(len(x) - 1)) if len(x) > 1 else True


def is_zonotope(p: Permutohedron) -> bool:
    """Zonotope exactly for arithmetic progressions (x_n > 0 already holds for type B)."""
    return is_arithmetic_progression(p.x)


def zonotope_generators_b(p: PermutohedronB) -> list[tuple]:
    """Half-vectors g with P = sum of segments [-g, g].

    For x_i = a + (n - i) b: (b/2)(e_i - e_j), (b/2)(e_i + e_j) for i < j and
    a e_i.
    """
    if p.kind != "B":
        raise PreconditionError("type B permutohedron expected")
    if not is_zonotope(p):
        raise NotAZonotopeError("x is not an arithmetic progression")
    n = p.n
    a = p.x[-1]
    b = p.x[0] - p.x[1] if n > 1 else Fraction(0)
    e = lambda i: [Fraction(int(t == i)) for t in range(n)]
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(tuple(b / 2 * (u - v) for u, v in zip(e(i), e(j))))
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(tuple(b / 2 * (u + v) for u, v in zip(e(i), e(j))))
    for i in range(n):
        gens.append(tuple(a * u for u in e(i)))
    return gens


def signed_permutation_directions(n: int) -> Iterator[tuple[int, ...]]:
    """Signed permutations of (n, ..., 1): one generic direction per chamber."""
    base = list(range(n, 0, -1))
    for perm in permutations(base):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, perm))


def minkowski_vertices(gens: Sequence[Sequence], directions) -> set:
    """Support maximizers sum_k sign(c.g_k) g_k of a sum of centred segments."""
    out = set()
    for c in directions:
        v = [Fraction(0)] * len(c)
        for g in gens:
            s = sum(ci * gi for ci, gi in zip(c, g))
            if s == 0:
                raise PreconditionError("direction is not generic for these segments")
            sign = 1 if s > 0 else -1
            v = [vi + sign * gi for vi, gi in zip(v, g)]
        out.add(tuple(v))
    return out


def is_centrally_symmetric(points: Sequence[Sequence]) -> bool:
    pts = {tuple(as_vector(v)) for v in points}
    k = len(pts)
    center = [sum(v[i] for v in pts) / k for i in range(len(next(iter(pts))))]
    return all(tuple(2 * c - x for c, x in zip(center, v)) in pts for v in pts)


def two_faces_symmetric(p: Permutohedron) -> tuple[bool, FaceDescriptor | None]:
    """Check every 2-face for central symmetry; returns (all symmetric, first witness)."""
    for f, verts in enumerate_faces(p, 2, vertices=True):
        if not is_centrally_symmetric(verts):
            return False, f
    return True, None
