"""Face numbers of projected permutohedra and belt polytopes.

A face F of P survives the projection G exactly when its normal cone meets
the row space of G in a non-zero point, so the oracle walks the fan of the
reflection (or given) arrangement and never builds a convex hull. Counting
requires a certified generic G.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Union

from .arrangements import (
    Arrangement,
    Flat,
    braid_arrangement,
    characteristic_polynomial,
    enumerate_regions,
    lattice_of_flats,
    region_cone,
    restriction,
    type_b_arrangement,
    is_general_position,
)
from .combinatorics import (
    enumerate_ordered_partitions,
    enumerate_signed_ordered_partitions,
    stirling1,
    stirling1_b,
    stirling2,
    stirling2_b,
)
from .cones import HCone, intersects_nontrivially, weyl_face_cone_a, weyl_face_cone_b
from .errors import NotCertifiedError, PreconditionError
from .exact_linalg import (
    RationalMatrix,
    Subspace,
    intersection,
    intersection_dim,
    kernel,
    random_rational_matrix,
    rank,
    rank_of_rows,
)
from .permutohedra import PermutohedronA, PermutohedronB, enumerate_faces

G1_MAX_N = 4


@dataclass(frozen=True)
class BeltPolytopeByArrangement:
    """A belt polytope known only through the arrangement whose fan is its normal fan."""

    arrangement: Arrangement
    dim: int = -1

    def __post_init__(self):
        if self.dim < 0:
            object.__setattr__(self, "dim", rank_of_rows(self.arrangement.hyperplanes))

    @property
    def ambient_dim(self) -> int:
        return self.arrangement.ambient_dim

    @property
    def n(self) -> int:
        return self.arrangement.ambient_dim

    kind = "belt"


Polytope = Union[PermutohedronA, PermutohedronB, BeltPolytopeByArrangement]


def arrangement_of(p: Polytope) -> Arrangement:
    if p.kind == "A":
        return braid_arrangement(p.n)
    if p.kind == "B":
        return type_b_arrangement(p.n)
    return p.arrangement


@dataclass(frozen=True)
class Certificate:
    """Outcome of both general-position checks.

    (G2): the row space of G against every flat of the arrangement.
    (G1): ker G against the affine hull of every face (permutohedra, small n).
    """

    g2_pass: bool
    g2_witness: Flat | None = None
    g1_checked: bool = False
    g1_pass: bool | None = None
    g1_witness: object = None

    @property
    def agree(self) -> bool | None:
        return None if not self.g1_checked else self.g1_pass == self.g2_pass

    @property
    def passed(self) -> bool:
        return self.g2_pass and (not self.g1_checked or bool(self.g1_pass))

    def to_json(self) -> dict:
        out = {"g2": self.g2_pass, "g1_checked": self.g1_checked, "pass": self.passed}
        if self.g1_checked:
            out["g1"] = self.g1_pass
            out["agree"] = self.agree
        if self.g2_witness is not None:
            out["g2_witness"] = self.g2_witness.to_json()
        if self.g1_witness is not None:
            out["g1_witness"] = self.g1_witness.to_json()
        return out


def _direction_space(n: int, verts) -> Subspace:
    v0 = verts[0]
    return Subspace.span(n, [[a - b for a, b in zip(v, v0)] for v in verts[1:]])


def _check_g1(p: Polytope, ker: Subspace):
    n = p.n
    for j in range(1, p.dim + 1):
        want = max(j + ker.dim - n, 0)
        seen = {}
        for f, verts in enumerate_faces(p, j, vertices=True):
            space = _direction_space(n, verts)
            key = space.canonical
            if key not in seen:
                seen[key] = intersection_dim(space, ker) == want
            if not seen[key]:
                return False, f
    return True, None


def certify_general_position(p: Polytope, g: RationalMatrix) -> Certificate:
    if g.cols != p.n:
        raise PreconditionError(f"matrix must have {p.n} columns")
    if rank(g) != g.rows:
        raise PreconditionError("projection matrix must have full row rank")
    gp = is_general_position(g.row_space(), arrangement_of(p))
    if p.kind in ("A", "B") and p.n <= G1_MAX_N:
        ok1, wit1 = _check_g1(p, kernel(g))
        return Certificate(gp.ok, gp.witness, True, ok1, wit1)
    return Certificate(gp.ok, gp.witness)


@dataclass(frozen=True)
class ProjectionSetup:
    polytope: Polytope
    matrix: RationalMatrix
    certificate: Certificate
    seed: int | None = None

    @property
    def d(self) -> int:
        return self.matrix.rows

    @classmethod
    def create(cls, p: Polytope, g: RationalMatrix, seed: int | None = None) -> "ProjectionSetup":
        return cls(p, g, certify_general_position(p, g), seed)

    @classmethod
    def random(cls, p: Polytope, d: int, seed: int, magnitude: int = 1000,
               max_tries: int = 20) -> "ProjectionSetup":
        """First certified matrix among seeds seed, seed + 1, ..."""
        if not 1 <= d <= p.n:
            raise PreconditionError("need 1 <= d <= n")
        last = None
        for k in range(max_tries):
            g = random_rational_matrix(d, p.n, seed + k, magnitude)
            if rank(g) != d:
                continue
            setup = cls.create(p, g, seed + k)
            if setup.certificate.passed:
                return setup
            last = setup
        if last is None:
            raise PreconditionError("no full-rank matrix found")
        return last

    def require_certified(self) -> None:
        if not self.certificate.passed:
            raise NotCertifiedError("projection matrix failed the general-position check")


# ---------------------------------------------------------------- oracle


def _fan_cones(kind: str, n: int, k: int):
    """The k-dimensional cones of the type A or B reflection fan."""
    if kind == "A":
        for part in enumerate_ordered_partitions(n, k):
            yield weyl_face_cone_a(part)
    else:
        for part in enumerate_signed_ordered_partitions(n, k):
            yield weyl_face_cone_b(part)


def _belt_cones(a: Arrangement, s: Subspace, k: int):
    """(cone, subspace) pairs in the charts of the k-flats: regions of each restriction."""
    for flat in lattice_of_flats(a).get(k, []):
        sub = restriction(a, flat)
        local = intersection(flat.subspace, s)
        chart = Subspace.span(k, [flat.chart_coordinates(v) for v in local.basis])
        if not sub.hyperplanes:
            yield HCone.make(k), chart
            continue
        for signs in enumerate_regions(sub):
            yield region_cone(sub, signs), chart


def _count_chunk(args) -> int:
    kind, payload, n, k, basis, index, stride = args
    s = Subspace.span(n, basis)
    total = 0
    if kind in ("A", "B"):
        items = ((c, s) for c in _fan_cones(kind, n, k))
    else:
        items = _belt_cones(payload, s, k)
    for t, (cone, sub) in enumerate(items):
        if t % stride == index and intersects_nontrivially(cone, sub):
            total += 1
    return total


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("BELTPOLY_THREADS", "1")))
    except ValueError:
        return 1


def count_fan_faces_meeting(kind: str, n: int, k: int, s: Subspace, threads: int | None = None,
                            arrangement: Arrangement | None = None) -> int:
    """Number of k-dimensional fan cones meeting s away from the origin."""
    threads = threads or default_threads()
    basis = [list(v) for v in s.basis]
    jobs = [(kind, arrangement, n, k, basis, i, threads) for i in range(threads)]
    if threads == 1:
        return _count_chunk(jobs[0])
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(_count_chunk, jobs))


def count_projected_faces_oracle(setup: ProjectionSetup, j: int, threads: int | None = None) -> int:
    """f_j(GP) as the number of (n-j)-dimensional fan cones meeting the row space of G."""
    setup.require_certified()
    if not 0 <= j < setup.d:
        raise PreconditionError("need 0 <= j < d")
    p = setup.polytope
    s = setup.matrix.row_space()
    arrangement = p.arrangement if p.kind == "belt" else None
    return count_fan_faces_meeting(p.kind, p.n, p.n - j, s, threads, arrangement)


# ---------------------------------------------------------------- formulas


def _tail(coeff, top: int, start: int) -> int:
    """coeff(start) + coeff(start + 2) + ... up to index top."""
    return sum(coeff(k) for k in range(start, top + 1, 2) if k >= 0)


def count_projected_faces_formula_a(n: int, d: int, j: int) -> int:
    if not 0 <= j < d <= n - 1:
        raise PreconditionError("need 0 <= j < d <= n - 1")
    return 2 * stirling2(n, n - j) * _tail(lambda k: stirling1(n - j, k), n - j, n - d + 1)


def count_projected_faces_formula_b(n: int, d: int, j: int) -> int:
    if not 0 <= j < d <= n:
        raise PreconditionError("need 0 <= j < d <= n")
    return 2 * stirling2_b(n, n - j) * _tail(lambda k: stirling1_b(n - j, k), n - j, n - d + 1)


def level_coefficients(a: Arrangement, k: int) -> list[tuple]:
    """Coefficient vectors a^M of chi_{A|M} for every flat M of dimension k."""
    return [characteristic_polynomial(restriction(a, m)).a for m in lattice_of_flats(a).get(k, [])]


def count_projected_faces_belt(a: Arrangement, dim_p: int, d: int, j: int) -> int:
    if not 0 <= j < d <= dim_p:
        raise PreconditionError("need 0 <= j < d <= dim P")
    n = a.ambient_dim
    total = 0
    for coeffs in level_coefficients(a, n - j):
        total += _tail(lambda k: coeffs[k] if 0 <= k < len(coeffs) else 0, n - j, n - d + 1)
    return 2 * total


def cube_face_count(n: int, d: int, j: int) -> int:
    """Projected j-faces of the n-cube."""
    if not 0 <= j < d <= n:
        raise PreconditionError("need 0 <= j < d <= n")
    return 2 * comb(n, j) * sum(comb(n - j - 1, l) for l in range(n - d, n - j))


def count_projected_faces_formula(p: Polytope, d: int, j: int) -> int:
    if p.kind == "A":
        return count_projected_faces_formula_a(p.n, d, j)
    if p.kind == "B":
        return count_projected_faces_formula_b(p.n, d, j)
    return count_projected_faces_belt(p.arrangement, p.dim, d, j)


def region_tail(a: Arrangement, d: int) -> int:
    """Regions met by a generic d-subspace: 2(a_{n-d+1} + a_{n-d+3} + ...)."""
    chi = characteristic_polynomial(a)
    n = a.ambient_dim
    return 2 * _tail(lambda k: chi.a[k], n, n - d + 1)


def regions_meeting(a: Arrangement, s: Subspace) -> int:
    """LP count of closed regions meeting s away from the origin."""
    return sum(1 for signs in enumerate_regions(a) if intersects_nontrivially(region_cone(a, signs), s))


def weyl_face_tail(kind: str, n: int, k: int, d: int) -> int:
    """k-dimensional Weyl-fan cones met by a generic d-subspace."""
    s1, s2 = (stirling1, stirling2) if kind == "A" else (stirling1_b, stirling2_b)
    return 2 * s2(n, k) * _tail(lambda t: s1(k, t), k, n - d + 1)


# ---------------------------------------------------------------- report


@dataclass
class FaceCountReport:
    """Projected face counts per j with provenance and the certificate."""

    polytope: str
    n: int
    d: int
    certificate: Certificate
    seed: int | None
    counts: dict = field(default_factory=dict)

    @property
    def agreement(self) -> bool | None:
        both = [c for c in self.counts.values() if "formula" in c and "oracle" in c]
        if not both:
            return None
        return all(c["formula"] == c["oracle"] for c in both)

    def to_json(self) -> dict:
        out = {
            "polytope": self.polytope,
            "n": self.n,
            "d": self.d,
            "seed": self.seed,
            "certificate": self.certificate.to_json(),
            "counts": {f"j{j}": v for j, v in sorted(self.counts.items())},
        }
        if self.agreement is not None:
            out["agreement"] = self.agreement
        return out


def describe(p: Polytope) -> str:
    if p.kind == "belt":
        return f"belt(n={p.n}, hyperplanes={len(p.arrangement)}, dim={p.dim})"
    return f"P_{p.n}^{p.kind}(" + ",".join(str(v) for v in p.x) + ")"


def face_count_report(setup: ProjectionSetup, js=None, method: str = "both",
                      threads: int | None = None) -> FaceCountReport:
    setup.require_certified()
    p = setup.polytope
    js = list(range(setup.d)) if js is None else list(js)
    rep = FaceCountReport(describe(p), p.n, setup.d, setup.certificate, setup.seed)
    for j in js:
        entry = {}
        if method in ("formula", "both"):
            entry["formula"] = count_projected_faces_formula(p, setup.d, j)
        if method in ("oracle", "both"):
            entry["oracle"] = count_projected_faces_oracle(setup, j, threads)
        rep.counts[j] = entry
    return rep
