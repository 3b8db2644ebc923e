"""Polyhedral cones in H-representation.

A cone is ``{x : a.x = 0 for a in equalities, b.x <= 0 for b in inequalities}``.
Rows are stored as primitive integer vectors; positive rescaling of a
homogeneous constraint does not change the cone.

All decisions go through exact LP feasibility (``lp``). The main test,
:func:`intersects_nontrivially`, is one Phase I solve after restricting to
the subspace and the equality system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels, lp
from .combinatorics import OrderedPartition, SignedOrderedPartition
from .errors import DimensionMismatchError, UnsupportedError
from .exact_linalg import Subspace, integer_row, rref

MAX_DUAL_DIM = 8


def _primitive(row: Sequence) -> tuple[int, ...]:
    return tuple(integer_row(row))


def _nonzero(row: Sequence[int]) -> bool:
    return any(row)


@dataclass(frozen=True)
class HCone:
    ambient_dim: int
    equalities: tuple = ()
    inequalities: tuple = ()

    def __post_init__(self):
        for r in self.equalities + self.inequalities:
            if len(r) != self.ambient_dim:
                raise DimensionMismatchError("constraint length differs from ambient dimension")

    @classmethod
    def make(cls, ambient_dim: int, equalities: Iterable[Sequence] = (),
             inequalities: Iterable[Sequence] = ()) -> "HCone":
        eqs = tuple(r for r in (_primitive(v) for v in equalities) if _nonzero(r))
        ineqs = tuple(r for r in (_primitive(v) for v in inequalities) if _nonzero(r))
        return cls(ambient_dim, eqs, ineqs)

    def contains(self, x: Sequence) -> bool:
        dot = lambda r: sum(Fraction(a) * b for a, b in zip(r, x))
        return all(dot(e) == 0 for e in self.equalities) and all(dot(b) <= 0 for b in self.inequalities)

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "equalities": [list(r) for r in self.equalities],
            "inequalities": [list(r) for r in self.inequalities],
        }


def _int_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Primitive integer basis of ``{z : rows z = 0}``."""
    if not rows:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(rows, ncols)
    out = []
    for f in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(integer_row(v))
    return out


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _restrict(c: HCone, basis: Sequence[Sequence]) -> tuple[list[list[int]], list[list[int]]]:
    """Parametrize ``c ∩ span(basis)`` as ``{x = P z : M z <= 0}``.

    ``P`` is an injective integer parametrization of the part of the span
    satisfying the equalities; ``M`` holds the non-zero restricted inequalities.
    """
    b = [integer_row(v) for v in basis]
    m = len(b)
    eb = [[_dot(e, v) for v in b] for e in c.equalities]
    eb = [r for r in eb if any(r)]
    k = _int_kernel(eb, m) if m else []
    p = [[sum(kt[i] * b[i][x] for i in range(m)) for x in range(c.ambient_dim)] for kt in k]
    rows = [[_dot(g, pv) for pv in p] for g in c.inequalities]
    return p, [r for r in rows if any(r)]


def _standard_basis(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def intersects_nontrivially(c: HCone, s: Subspace, method: str = "gordan") -> bool:
    """Is there a non-zero ``x`` in both the cone and the subspace?

    With ``x = P z`` and restricted inequalities ``M z <= 0`` (``M`` injective)
    a non-zero solution exists iff no strictly positive ``u`` has
    ``M^T u = 0``. ``method="normalized"`` instead solves up to ``2 dim``
    primal LPs with one coordinate of ``z`` fixed to +-1; it serves as an
    independent cross-check.
    """
    if c.ambient_dim != s.ambient_dim:
        raise DimensionMismatchError("cone and subspace live in different spaces")
    p, m = _restrict(c, s.basis)
    k = len(p)
    if k == 0:
        return False
    if not m:
        return True
    if method == "normalized":
        le = [(r, 0) for r in m]
        for i in range(k):
            for sign in (1, -1):
                unit = [int(t == i) for t in range(k)]
                if lp.feasible(k, eq=[(unit, sign)], le=le):
                    return True
        return False
    if kernels.int_rank(m) < k:
        return True
    mt = [[r[i] for r in m] for i in range(k)]
    rhs = [-sum(row) for row in mt]
    return not kernels.phase1_feasible(mt, rhs)


def interior_intersects(c: HCone, s: Subspace) -> bool:
    """Does the subspace meet the topological interior of the cone?"""
    if c.ambient_dim != s.ambient_dim:
        raise DimensionMismatchError("cone and subspace live in different spaces")
    if c.equalities:
        return False
    b = [integer_row(v) for v in s.basis]
    rows = [[_dot(g, v) for v in b] for g in c.inequalities]
    return lp.strictly_feasible(rows, len(b))


def cone_dim(c: HCone) -> int:
    """Dimension of the cone: equality subspace minus implicit equalities."""
    p, m = _restrict(c, _standard_basis(c.ambient_dim))
    k = len(p)
    implicit = [r for r in m if lp.in_cone(m, k, [-x for x in r])]
    if not implicit:
        return k
    return k - kernels.int_rank(implicit)


def implies(c: HCone, g: Sequence, equality: bool = False) -> bool:
    """Is ``g.x <= 0`` (or ``g.x = 0``) valid on the whole cone?"""
    p, m = _restrict(c, _standard_basis(c.ambient_dim))
    gp = [_dot(integer_row(g), pv) for pv in p]
    if not lp.in_cone(m, len(p), gp):
        return False
    return not equality or lp.in_cone(m, len(p), [-x for x in gp])


def is_subset(a: HCone, b: HCone) -> bool:
    """``a ⊆ b``, decided constraint by constraint."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("cones live in different spaces")
    p, m = _restrict(a, _standard_basis(a.ambient_dim))
    k = len(p)
    for g in b.inequalities:
        if not lp.in_cone(m, k, [_dot(g, pv) for pv in p]):
            return False
    for e in b.equalities:
        ep = [_dot(e, pv) for pv in p]
        if not (lp.in_cone(m, k, ep) and lp.in_cone(m, k, [-x for x in ep])):
            return False
    return True


def same_cone(a: HCone, b: HCone) -> bool:
    return is_subset(a, b) and is_subset(b, a)


def is_linear_subspace(c: HCone) -> bool:
    """True when every inequality is implied to hold with equality."""
    p, m = _restrict(c, _standard_basis(c.ambient_dim))
    return all(lp.in_cone(m, len(p), [-x for x in r]) for r in m)


def _solve_square(a: list[list[int]], rhs: list[int]) -> list[Fraction]:
    r = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(a, rhs)]
    red, pivots = rref(aug, r + 1)
    return [red[i][r] for i in range(r)]


def _extreme_rays(a: list[list[int]], r: int) -> list[list[int]]:
    """Extreme rays of the pointed cone ``{u in Q^r : a u <= 0}`` (rank a = r).

    Double description: start from a simplicial cone on ``r`` independent
    rows and add the remaining rows one at a time, combining adjacent ray
    pairs across each new hyperplane.
    """
    chosen: list[int] = []
    for i, row in enumerate(a):
        if kernels.int_rank([a[t] for t in chosen] + [row]) > len(chosen):
            chosen.append(i)
        if len(chosen) == r:
            break
    sub = [a[i] for i in chosen]
    rays = []
    for t in range(r):
        sol = _solve_square(sub, [-int(i == t) for i in range(r)])
        rays.append(integer_row(sol))
    processed = list(chosen)
    for i, row in enumerate(a):
        if i in chosen:
            continue
        vals = [_dot(row, ray) for ray in rays]
        plus = [ray for ray, v in zip(rays, vals) if v > 0]
        if not plus:
            processed.append(i)
            continue
        keep = [ray for ray, v in zip(rays, vals) if v <= 0]
        minus = [(ray, v) for ray, v in zip(rays, vals) if v < 0]
        new = []
        for pr in plus:
            pv = _dot(row, pr)
            zp = {t for t in processed if _dot(a[t], pr) == 0}
            for qr, qv in minus:
                common = [a[t] for t in processed if t in zp and _dot(a[t], qr) == 0]
                if len(common) < r - 2:
                    continue
                if (kernels.int_rank(common) if common else 0) != r - 2:
                    continue
                new.append(integer_row([pv * y - qv * x for x, y in zip(pr, qr)]))
        rays = keep + new
        processed.append(i)
    uniq = []
    for ray in rays:
        if ray not in uniq:
            uniq.append(ray)
    return uniq


def generators(c: HCone) -> tuple[list[list[int]], list[list[int]]]:
    """(lineality basis, extreme rays of the pointed part), integer vectors."""
    n = c.ambient_dim
    p, m = _restrict(c, _standard_basis(n))
    k = len(p)
    lift = lambda z: integer_row([sum(z[i] * p[i][x] for i in range(k)) for x in range(n)])
    lin_z = _int_kernel(m, k) if m else [[int(i == j) for j in range(k)] for i in range(k)]
    lineality = [lift(z) for z in lin_z]
    if not m or len(lin_z) == k:
        return lineality, []
    red, _ = rref(m, k)
    basis_rows = [integer_row(r) for r in red]
    r = len(basis_rows)
    a = [[_dot(row, br) for br in basis_rows] for row in m]
    rays_u = _extreme_rays(a, r)
    rays = []
    for u in rays_u:
        z = [sum(u[t] * basis_rows[t][i] for t in range(r)) for i in range(k)]
        rays.append(lift(z))
    return lineality, rays


def dual_cone(c: HCone) -> HCone:
    """Polar cone ``{v : <v, x> <= 0 for all x in c}``."""
    if c.ambient_dim > MAX_DUAL_DIM:
        raise UnsupportedError(f"dual_cone supports ambient dimension <= {MAX_DUAL_DIM}")
    lineality, rays = generators(c)
    return HCone.make(c.ambient_dim, lineality, rays)


def weyl_face_cone_a(p: OrderedPartition) -> HCone:
    """Fan face Q_B: constant on blocks, weakly decreasing from block to block."""
    n = p.n
    e = lambda i: [int(t == i - 1) for t in range(n)]
    eqs, ineqs = [], []
    for block in p.blocks:
        for other in block[1:]:
            eqs.append([x - y for x, y in zip(e(block[0]), e(other))])
    for hi, lo in zip(p.blocks, p.blocks[1:]):
        ineqs.append([x - y for x, y in zip(e(lo[0]), e(hi[0]))])
    return HCone.make(n, eqs, ineqs)


def weyl_face_cone_b(p: SignedOrderedPartition) -> HCone:
    """Fan face Q_{B,eta}: eta_i beta_i constant on blocks, decreasing, last >= 0, zero block 0."""
    n = p.n
    sv = lambda i: [p.signs[i - 1] * int(t == i - 1) for t in range(n)]
    eqs, ineqs = [], []
    for block in p.blocks:
        for other in block[1:]:
            eqs.append([x - y for x, y in zip(sv(block[0]), sv(other))])
    for i in p.zero_block:
        eqs.append([int(t == i - 1) for t in range(n)])
    for hi, lo in zip(p.blocks, p.blocks[1:]):
        ineqs.append([x - y for x, y in zip(sv(lo[0]), sv(hi[0]))])
    if p.blocks:
        ineqs.append([-x for x in sv(p.blocks[-1][0])])
    return HCone.make(n, eqs, ineqs)
