"""The desk-scale verification suite.

Each criterion compares independently computed quantities exactly (LP
oracle against closed form, Whitney against Moebius, enumeration against
counting formula) and returns a :class:`CriterionResult`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, sqrt
from typing import Callable

import numpy as np

from . import angles
from .arrangements import (
    Arrangement,
    boolean_arrangement,
    braid_arrangement,
    characteristic_polynomial,
    enumerate_regions,
    is_general_position,
    region_count,
    type_b_arrangement,
    zonotope_arrangement,
)
from .combinatorics import OrderedPartition
from .cones import HCone, weyl_face_cone_a
from .exact_linalg import Subspace, random_rational_matrix
from .permutohedra import (
    PermutohedronA,
    PermutohedronB,
    enumerate_faces,
    face_vector,
    face_vertices,
    is_arithmetic_progression,
    is_zonotope,
    minkowski_vertices,
    signed_permutation_directions,
    two_faces_symmetric,
    zonotope_generators_b,
)
from .projection import (
    BeltPolytopeByArrangement,
    ProjectionSetup,
    count_fan_faces_meeting,
    count_projected_faces_belt,
    count_projected_faces_formula_a,
    count_projected_faces_formula_b,
    count_projected_faces_oracle,
    cube_face_count,
    region_tail,
    regions_meeting,
    weyl_face_tail,
)

MATRICES_PER_CASE = 5
SEED_STRIDE = 100


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checks: int
    seconds: float
    gating: bool = True
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tag = "" if self.gating else " (non-gating)"
        return f"[{status}] criterion {self.number}: {self.title}{tag} ({self.checks} checks, {self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "gating": self.gating, "checks": self.checks, "failures": self.failures[:20]}


class _Tally:
    def __init__(self):
        self.checks = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)


def _run(number: int, title: str, body: Callable[[_Tally], None], gating: bool = True) -> CriterionResult:
    t0 = time.perf_counter()
    tally = _Tally()
    body(tally)
    return CriterionResult(number, title, not tally.failures, tally.checks,
                           time.perf_counter() - t0, gating, tally.failures)


def _certified_setups(p, d: int, seed: int, count: int = MATRICES_PER_CASE) -> list[ProjectionSetup]:
    """``count`` certified setups from disjoint seed windows."""
    out = []
    for t in range(count):
        setup = ProjectionSetup.random(p, d, seed + t * SEED_STRIDE)
        if setup.certificate.passed:
            out.append(setup)
    return out


def _equiprojectivity(tally: _Tally, kind: str, ns, seed: int, threads: int | None) -> None:
    for n in ns:
        x = list(range(n, 0, -1))
        p = PermutohedronA(x) if kind == "A" else PermutohedronB(x)
        top = n - 1 if kind == "A" else n
        formula = count_projected_faces_formula_a if kind == "A" else count_projected_faces_formula_b
        for d in range(1, top + 1):
            setups = _certified_setups(p, d, seed + 1000 * n + 10 * d)
            tally.expect(len(setups) == MATRICES_PER_CASE, f"{kind} n={n} d={d}: only {len(setups)} certified")
            mats = {s.matrix.entries for s in setups}
            tally.expect(len(mats) == len(setups), f"{kind} n={n} d={d}: repeated matrix")
            for s in setups:
                tally.expect(s.certificate.agree in (True, None),
                             f"{kind} n={n} d={d} seed={s.seed}: G1/G2 disagree")
                for j in range(d):
                    got = count_projected_faces_oracle(s, j, threads)
                    want = formula(n, d, j)
                    tally.expect(got == want, f"{kind} n={n} d={d} j={j} seed={s.seed}: oracle {got} != {want}")


def criterion_1(seed: int = 42, threads: int | None = None) -> CriterionResult:
    return _run(1, "equiprojectivity, type A",
                lambda t: _equiprojectivity(t, "A", (3, 4, 5), seed, threads))


def criterion_2(seed: int = 42, threads: int | None = None) -> CriterionResult:
    return _run(2, "equiprojectivity, type B",
                lambda t: _equiprojectivity(t, "B", (2, 3, 4), seed, threads))


def criterion_3(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        for n in range(2, 6):
            a = braid_arrangement(n)
            for d in range(1, n):
                for j in range(d):
                    got, want = count_projected_faces_belt(a, n - 1, d, j), count_projected_faces_formula_a(n, d, j)
                    t.expect(got == want, f"braid n={n} d={d} j={j}: {got} != {want}")
        for n in range(1, 5):
            a = type_b_arrangement(n)
            for d in range(1, n + 1):
                for j in range(d):
                    got, want = count_projected_faces_belt(a, n, d, j), count_projected_faces_formula_b(n, d, j)
                    t.expect(got == want, f"type B n={n} d={d} j={j}: {got} != {want}")
        for n in range(1, 7):
            a = boolean_arrangement(n)
            for d in range(1, n + 1):
                for j in range(d):
                    got, want = count_projected_faces_belt(a, n, d, j), cube_face_count(n, d, j)
                    t.expect(got == want, f"boolean n={n} d={d} j={j}: {got} != {want}")
    return _run(3, "belt specialization", body)


def _falling(n: int, step: int, first: int) -> list[int]:
    """Coefficients (low degree first) of prod_{i<n} (t - first - step*i)."""
    poly = [1]
    for i in range(n):
        c = first + step * i
        out = [0] * (len(poly) + 1)
        for k, a in enumerate(poly):
            out[k] -= c * a
            out[k + 1] += a
        poly = out
    return poly


def shipped_arrangements() -> list[tuple[str, Arrangement]]:
    """Arrangements exercised by the suite, smallest first."""
    out = []
    out += [(f"braid({n})", braid_arrangement(n)) for n in range(2, 7)]
    out += [(f"typeB({n})", type_b_arrangement(n)) for n in range(1, 6)]
    out += [(f"boolean({n})", boolean_arrangement(n)) for n in range(1, 7)]
    out.append(("zonotope(e1,e2,e1+e2)", zonotope_arrangement([[1, 0], [0, 1], [1, 1]])))
    out.append(("zonotope(3d,6)", zonotope_arrangement(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]])))
    out.append(("zonotope(3d,7)", zonotope_arrangement(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 0], [0, 1, -1], [1, 1, 1], [2, -1, 3]])))
    out.append(("zonotope(4d,8)", zonotope_arrangement(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
         [1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 1, 1, 1]])))
    return out


def criterion_4(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        for name, a in shipped_arrangements():
            moeb = characteristic_polynomial(a, "moebius")
            if len(a) <= 16:
                whit = characteristic_polynomial(a, "whitney")
                t.expect(whit == moeb, f"{name}: whitney {whit.a} != moebius {moeb.a}")
        for n in range(2, 7):
            chi = characteristic_polynomial(braid_arrangement(n))
            want = _falling(n, 1, 0)
            t.expect([chi.coefficient(k) for k in range(n + 1)] == want, f"braid({n}) chi mismatch")
        for n in range(1, 6):
            chi = characteristic_polynomial(type_b_arrangement(n))
            want = _falling(n, 2, 1)
            t.expect([chi.coefficient(k) for k in range(n + 1)] == want, f"typeB({n}) chi mismatch")
        for n in range(1, 5):
            cases = [(f"typeB({n})", type_b_arrangement(n), 2 ** n * factorial(n)),
                     (f"boolean({n})", boolean_arrangement(n), 2 ** n)]
            if n >= 2:
                cases.append((f"braid({n})", braid_arrangement(n), factorial(n)))
            for name, a, want in cases:
                z, lp_count = region_count(a), len(enumerate_regions(a))
                t.expect(z == want and lp_count == want, f"{name}: Zaslavsky {z}, LP {lp_count}, want {want}")
    return _run(4, "characteristic polynomials", body)


def criterion_5(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        polys = [PermutohedronA(list(range(n, 0, -1))) for n in range(1, 7)]
        polys += [PermutohedronB(list(range(n, 0, -1))) for n in range(1, 5)]
        for p in polys:
            fv = face_vector(p)
            counted = [sum(1 for _ in enumerate_faces(p, j)) for j in range(p.dim + 1)]
            t.expect(counted == fv, f"P_{p.n}^{p.kind}: enumerated {counted} != {fv}")
            euler = sum((-1) ** j * f for j, f in enumerate(fv))
            t.expect(euler == 1, f"P_{p.n}^{p.kind}: Euler sum {euler}")
        fv = face_vector(PermutohedronB([3, 2, 1]))
        t.expect(fv == [48, 72, 26, 1], f"P_3^B face vector {fv}")
    return _run(5, "face vectors", body)


def criterion_6(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        for kind, ns in (("A", (3, 4, 5)), ("B", (2, 3, 4))):
            for n in ns:
                x = list(range(n, 0, -1))
                p = PermutohedronA(x) if kind == "A" else PermutohedronB(x)
                fv = face_vector(p)
                gsum = angles.grassmann_sum_a if kind == "A" else angles.grassmann_sum_b
                for d in range(1, p.dim + 1):
                    setup = ProjectionSetup.random(p, d, seed + 7 + 1000 * n + 10 * d)
                    t.expect(setup.certificate.passed, f"{kind} n={n} d={d}: no certified matrix")
                    for j in range(d):
                        lhs = gsum(n, j, d)
                        rhs = fv[j] - count_projected_faces_oracle(setup, j, threads)
                        t.expect(lhs == rhs, f"{kind} n={n} j={j} d={d}: gamma sum {lhs} != {rhs}")
        tables = [angles.table_a(n) for n in range(2, 6)] + [angles.table_b(n) for n in range(1, 5)]
        for name, a in shipped_arrangements():
            if len(a) <= 16:
                tables.append(angles.table_belt(a, _rank(a), name))
        for tab in tables:
            bad = angles.crofton_violations(tab)
            t.expect(not bad, f"{tab.polytope}: {bad[:2]}")
            bad = angles.total_violations(tab)
            t.expect(not bad, f"{tab.polytope}: {bad[:2]}")
    return _run(6, "angle-sum grid", body)


def _rank(a: Arrangement) -> int:
    return BeltPolytopeByArrangement(a).dim


def _generic_subspace(a: Arrangement, d: int, seed: int) -> Subspace | None:
    for k in range(20):
        s = random_rational_matrix(d, a.ambient_dim, seed + k, 1000).row_space()
        if s.dim == d and is_general_position(s, a).ok:
            return s
    return None


def criterion_7(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        for name, a in shipped_arrangements():
            if len(a) > 12:
                continue
            n = a.ambient_dim
            for d in range(1, n + 1):
                s = _generic_subspace(a, d, seed + 31 * d)
                t.expect(s is not None, f"{name} d={d}: no generic subspace")
                if s is None:
                    continue
                got, want = regions_meeting(a, s), region_tail(a, d)
                t.expect(got == want, f"{name} d={d}: LP {got} != tail {want}")
        for kind, ns in (("A", range(2, 6)), ("B", range(1, 5))):
            for n in ns:
                a = braid_arrangement(n) if kind == "A" else type_b_arrangement(n)
                top = n - 1 if kind == "A" else n
                for d in range(1, top + 1):
                    s = _generic_subspace(a, d, seed + 17 * d + n)
                    t.expect(s is not None, f"{kind} n={n} d={d}: no generic subspace")
                    if s is None:
                        continue
                    for k in range(1, n + 1):
                        got = count_fan_faces_meeting(kind, n, k, s, threads)
                        want = weyl_face_tail(kind, n, k, d)
                        t.expect(got == want, f"{kind} n={n} k={k} d={d}: LP {got} != {want}")
    return _run(7, "region and Weyl-face intersection counts", body)


def _random_decreasing(rng, n: int, positive: bool) -> list[int]:
    vals = rng.choice(np.arange(1 if positive else -20, 21), size=n, replace=False)
    return sorted((int(v) for v in vals), reverse=True)


def criterion_8(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        rng = np.random.default_rng(seed)
        xs = []
        for k in range(50):
            n = 3 + k % 2
            kind = "A" if k % 4 < 2 else "B"
            xs.append((kind, _random_decreasing(rng, n, positive=kind == "B")))
        for n in (3, 4):
            for a, b in ((1, 1), (2, 3), (5, 1), (Fraction(1, 2), Fraction(3, 2))):
                prog = [a + (n - 1 - i) * b for i in range(n)]
                xs.append(("A", prog))
                xs.append(("B", prog))
            xs.append(("A", [-1 + (n - 1 - i) * 2 for i in range(n)]))
        for kind, x in xs:
            p = PermutohedronA(x) if kind == "A" else PermutohedronB(x)
            ap = is_arithmetic_progression(x)
            sym, _ = two_faces_symmetric(p)
            t.expect(is_zonotope(p) == ap, f"{kind}{x}: is_zonotope disagrees with progression test")
            t.expect(sym == ap, f"{kind}{x}: 2-face symmetry {sym}, progression {ap}")
        p = PermutohedronB([3, 2, 1])
        gens = zonotope_generators_b(p)
        mink = minkowski_vertices(gens, signed_permutation_directions(3))
        verts = {v for f in enumerate_faces(p, 0) for v in face_vertices(p, f)}
        t.expect(len(gens) == 9, f"expected 9 segments, got {len(gens)}")
        t.expect(mink == verts and len(verts) == 48, f"Minkowski vertices {len(mink)} vs enumerated {len(verts)}")
    return _run(8, "zonotope characterization", body)


MC_SAMPLES = 10_000


def mc_cases() -> list[tuple[str, HCone, int, Fraction]]:
    """(name, cone, d, exact gamma_d)."""
    chamber = weyl_face_cone_a(OrderedPartition(3, ((1,), (2,), (3,))))
    return [
        ("half-plane x1<=0, d=1", HCone.make(2, [], [[1, 0]]), 1, Fraction(1)),
        ("quadrant, d=1", HCone.make(2, [], [[-1, 0], [0, -1]]), 1, Fraction(1, 2)),
        ("A2 chamber, d=1", chamber, 1, Fraction(1)),
        ("A2 chamber, d=2", chamber, 2, Fraction(1, 3)),
    ]


def criterion_9(seed: int = 42, threads: int | None = None) -> CriterionResult:
    def body(t: _Tally):
        for name, cone, d, exact in mc_cases():
            est = angles.grassmann_mc_estimate(cone, d, MC_SAMPLES, seed)
            p = float(exact)
            sigma = sqrt(p * (1 - p) / MC_SAMPLES)
            t.expect(abs(est.value - p) <= 4 * sigma,
                     f"{name}: estimate {est.value:.4f}, exact {exact}, 4 sigma {4 * sigma:.4f}")
    return _run(9, "Monte Carlo sanity", body, gating=False)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}


def run_suite(seed: int = 42, threads: int | None = None, only=None) -> list[CriterionResult]:
    keys = sorted(CRITERIA) if only is None else list(only)
    return [CRITERIA[k](seed, threads) for k in keys]
