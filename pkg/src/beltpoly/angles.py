"""Sums of Grassmann angles and conic intrinsic volumes of tangent cones.

Sums run over all j-faces F of the polytope and concern the tangent cones
T_F. Values are exact rationals built from Stirling numbers (permutohedra)
or from level characteristic polynomials (belt polytopes). A Monte Carlo
estimator for single cones serves as an independent sanity check.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

import numpy as np

from .arrangements import Arrangement, characteristic_polynomial, lattice_of_flats, restriction
from .combinatorics import stirling1, stirling1_b, stirling2, stirling2_b
from .cones import HCone, intersects_nontrivially, is_linear_subspace
from .errors import IncompleteTableError, PreconditionError
from .exact_linalg import Subspace
from .permutohedra import face_vector_a, face_vector_b


def _check(j: int, d: int, top: int) -> None:
    if not 0 <= j <= d <= top:
        raise PreconditionError(f"need 0 <= j <= d <= {top}")


def _odd_tail(s1, m: int, start: int) -> int:
    """s1(m, start) + s1(m, start - 2) + ... (terms with negative index vanish)."""
    return sum(s1(m, k) for k in range(start, -1, -2))


def grassmann_sum_a(n: int, j: int, d: int) -> Fraction:
    _check(j, d, n - 1)
    return Fraction(2 * stirling2(n, n - j) * _odd_tail(stirling1, n - j, n - d - 1))


def grassmann_sum_b(n: int, j: int, d: int) -> Fraction:
    _check(j, d, n)
    return Fraction(2 * stirling2_b(n, n - j) * _odd_tail(stirling1_b, n - j, n - d - 1))


def intrinsic_volume_sum_a(n: int, j: int, d: int) -> Fraction:
    _check(j, d, n - 1)
    if d == j:
        # normal cones of the j-faces at one level tile their flats
        return Fraction(stirling2(n, n - j))
    return Fraction(stirling2(n, n - j) * stirling1(n - j, n - d))


def intrinsic_volume_sum_b(n: int, j: int, d: int) -> Fraction:
    _check(j, d, n)
    if d == j:
        return Fraction(stirling2_b(n, n - j))
    return Fraction(stirling2_b(n, n - j) * stirling1_b(n - j, n - d))


def _level(a: Arrangement, k: int) -> list[tuple]:
    return [characteristic_polynomial(restriction(a, m)).a for m in lattice_of_flats(a).get(k, [])]


def angle_sums_belt(a: Arrangement, dim_p: int, j: int, d: int) -> tuple[Fraction, Fraction]:
    """(sum of upsilon_d, sum of gamma_d) over the j-faces of a belt polytope."""
    _check(j, d, dim_p)
    n = a.ambient_dim
    level = _level(a, n - j)
    coeff = lambda c, k: c[k] if 0 <= k < len(c) else 0
    if d == j:
        ups = len(level)
    else:
        ups = sum(coeff(c, n - d) for c in level)
    gam = 2 * sum(coeff(c, k) for c in level for k in range(n - d - 1, -1, -2))
    return Fraction(ups), Fraction(gam)


def belt_face_vector(a: Arrangement, dim_p: int) -> list[int]:
    """f_j: regions of the restrictions to all (n - j)-flats."""
    n = a.ambient_dim
    return [sum(sum(c) for c in _level(a, n - j)) for j in range(dim_p + 1)]


@dataclass
class AngleSumTable:
    """upsilon[(j, d)] and gamma[(j, d)] over 0 <= j <= d <= dim.

    The top face (j = dim) has a linear tangent cone and carries no gamma row.
    """

    polytope: str
    dim: int
    f: list
    upsilon: dict = field(default_factory=dict)
    gamma: dict = field(default_factory=dict)

    def to_json(self, csv: bool = False) -> dict:
        fmt = lambda v: str(v) if v.denominator != 1 else str(v.numerator)
        return {
            "polytope": self.polytope,
            "dim": self.dim,
            "f": list(self.f),
            "upsilon": {f"{j},{d}": fmt(v) for (j, d), v in sorted(self.upsilon.items())},
            "gamma": {f"{j},{d}": fmt(v) for (j, d), v in sorted(self.gamma.items())},
        }


def table_a(n: int) -> AngleSumTable:
    t = AngleSumTable(f"P_{n}^A", n - 1, face_vector_a(n))
    for j in range(n):
        for d in range(j, n):
            t.upsilon[j, d] = intrinsic_volume_sum_a(n, j, d)
            if j < n - 1:
                t.gamma[j, d] = grassmann_sum_a(n, j, d)
    return t


def table_b(n: int) -> AngleSumTable:
    t = AngleSumTable(f"P_{n}^B", n, face_vector_b(n))
    for j in range(n + 1):
        for d in range(j, n + 1):
            t.upsilon[j, d] = intrinsic_volume_sum_b(n, j, d)
            if j < n:
                t.gamma[j, d] = grassmann_sum_b(n, j, d)
    return t


def table_belt(a: Arrangement, dim_p: int, name: str = "belt") -> AngleSumTable:
    t = AngleSumTable(name, dim_p, belt_face_vector(a, dim_p))
    for j in range(dim_p + 1):
        for d in range(j, dim_p + 1):
            ups, gam = angle_sums_belt(a, dim_p, j, d)
            t.upsilon[j, d] = ups
            if j < dim_p:
                t.gamma[j, d] = gam
    return t


def crofton_violations(table: AngleSumTable) -> list[str]:
    """Rows where either Crofton relation fails, summed over the j-faces.

    gamma_k = 2 (upsilon_{k+1} + upsilon_{k+3} + ...), and
    upsilon_k = (gamma_{k-1} - gamma_{k+1}) / 2 where gamma_{j-1} sums to f_j
    (every tangent cone contains a j-dimensional subspace) and
    gamma_{dim+1} = 0.
    """
    top = table.dim
    for j in range(top + 1):
        for d in range(j, top + 1):
            if (j, d) not in table.upsilon or (j < top and (j, d) not in table.gamma):
                raise IncompleteTableError(f"missing entry at (j={j}, d={d})")
    bad = []
    for j in range(top):
        g = lambda k: (Fraction(table.f[j]) if k == j - 1 else
                       Fraction(0) if k > top else table.gamma[j, k])
        for k in range(j, top + 1):
            rhs = 2 * sum(table.upsilon[j, k + i] for i in range(1, top - k + 1, 2))
            if table.gamma[j, k] != rhs:
                bad.append(f"gamma({j},{k}) = {table.gamma[j, k]} but 2*sum upsilon = {rhs}")
            ups = (g(k - 1) - g(k + 1)) / 2
            if table.upsilon[j, k] != ups:
                bad.append(f"upsilon({j},{k}) = {table.upsilon[j, k]} but gamma difference = {ups}")
    return bad


def crofton_check(table: AngleSumTable) -> bool:
    return not crofton_violations(table)


def total_violations(table: AngleSumTable) -> list[str]:
    """Per-j totals: each tangent cone has total conic measure 1."""
    bad = []
    for j in range(table.dim + 1):
        tot = sum(table.upsilon[j, d] for d in range(j, table.dim + 1))
        if tot != table.f[j]:
            bad.append(f"sum_d upsilon({j},d) = {tot}, f_{j} = {table.f[j]}")
    return bad


@dataclass(frozen=True)
class MCEstimate:
    value: float
    stderr: float
    hits: int
    samples: int
    is_subspace: bool

    def to_json(self) -> dict:
        return {"value": self.value, "stderr": self.stderr, "hits": self.hits,
                "samples": self.samples, "is_subspace": self.is_subspace}


def _mc_worker(args) -> int:
    cone, d, count, seed_seq, magnitude = args
    n = cone.ambient_dim
    rng = np.random.default_rng(seed_seq)
    k = n - d
    hits = 0
    for _ in range(count):
        rows = rng.integers(-magnitude, magnitude, size=(k, n), endpoint=True).tolist() if k else []
        if intersects_nontrivially(cone, Subspace.span(n, rows)):
            hits += 1
    return hits


def grassmann_mc_estimate(c: HCone, d: int, samples: int, seed: int, workers: int = 1,
                          magnitude: int = 10 ** 6) -> MCEstimate:
    """Fraction of random (n - d)-subspaces meeting the cone away from 0.

    Subspaces are spans of integer matrices with entries uniform in
    [-magnitude, magnitude]; every intersection test is exact. Worker w uses
    the w-th child of SeedSequence(seed), so the result depends only on
    (seed, samples, workers).
    """
    if samples < 1:
        raise PreconditionError("samples must be positive")
    if not 0 <= d <= c.ambient_dim:
        raise PreconditionError("need 0 <= d <= n")
    children = np.random.SeedSequence(seed).spawn(workers)
    counts = [samples // workers + (w < samples % workers) for w in range(workers)]
    jobs = [(c, d, cnt, child, magnitude) for cnt, child in zip(counts, children)]
    if workers == 1:
        hits = _mc_worker(jobs[0])
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_mc_worker, jobs))
    p = hits / samples
    return MCEstimate(p, sqrt(p * (1 - p) / samples), hits, samples, is_linear_subspace(c))
