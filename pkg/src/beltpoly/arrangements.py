"""Central hyperplane arrangements.

Hyperplanes are stored by primitive integer normals whose first non-zero
entry is positive, so parallel normals collapse to one hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import lp
from .errors import DimensionMismatchError, PreconditionError
from .exact_linalg import Subspace, as_vector, integer_row, intersection_dim, rref


def canonical_normal(v: Sequence) -> tuple[int, ...]:
    row = integer_row(v)
    if not any(row):
        raise PreconditionError("hyperplane normal must be non-zero")
    lead = next(x for x in row if x)
    return tuple(-x for x in row) if lead < 0 else tuple(row)


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: tuple

    def __post_init__(self):
        seen = set()
        for v in self.hyperplanes:
            if len(v) != self.ambient_dim:
                raise DimensionMismatchError("normal length differs from ambient dimension")
            key = canonical_normal(v)
            if key in seen:
                raise PreconditionError("parallel normals define the same hyperplane")
            seen.add(key)

    @classmethod
    def from_normals(cls, ambient_dim: int, normals: Iterable[Sequence]) -> "Arrangement":
        """Canonicalize and deduplicate the normals, keeping first-seen order."""
        out: list[tuple[int, ...]] = []
        for v in normals:
            key = canonical_normal(v)
            if len(key) != ambient_dim:
                raise DimensionMismatchError("normal length differs from ambient dimension")
            if key not in out:
                out.append(key)
        return cls(ambient_dim, tuple(out))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def delete(self, index: int) -> "Arrangement":
        return Arrangement(self.ambient_dim, self.hyperplanes[:index] + self.hyperplanes[index + 1:])

    def to_text(self) -> str:
        lines = [f"dim {self.ambient_dim}"]
        lines += [" ".join(str(x) for x in v) for v in self.hyperplanes]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Arrangement":
        """Parse ``dim n`` (or ``n``) followed by one normal per line."""
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise PreconditionError("empty arrangement file")
        head = lines[0].split()
        if head[0].lower() == "dim":
            head = head[1:]
        if not head:
            raise PreconditionError("arrangement header needs the ambient dimension")
        n = int(head[0])
        normals = [as_vector(ln.split()) for ln in lines[1:]]
        for v in normals:
            if len(v) != n:
                raise DimensionMismatchError(f"normal {list(map(str, v))} does not have {n} entries")
        return cls.from_normals(n, normals)


def _unit(n: int, i: int) -> list[int]:
    return [int(t == i) for t in range(n)]


def braid_arrangement(n: int) -> Arrangement:
    """Hyperplanes x_i = x_j, i < j."""
    if n < 2:
        raise PreconditionError("braid arrangement needs n >= 2")
    normals = []
    for i in range(n):
        for j in range(i + 1, n):
            normals.append([a - b for a, b in zip(_unit(n, i), _unit(n, j))])
    return Arrangement.from_normals(n, normals)


def type_b_arrangement(n: int) -> Arrangement:
    """Hyperplanes x_i = x_j, x_i = -x_j (i < j) and x_i = 0."""
    if n < 1:
        raise PreconditionError("type B arrangement needs n >= 1")
    normals = []
    for i in range(n):
        for j in range(i + 1, n):
            normals.append([a - b for a, b in zip(_unit(n, i), _unit(n, j))])
    for i in range(n):
        for j in range(i + 1, n):
            normals.append([a + b for a, b in zip(_unit(n, i), _unit(n, j))])
    for i in range(n):
        normals.append(_unit(n, i))
    return Arrangement.from_normals(n, normals)


def boolean_arrangement(n: int) -> Arrangement:
    if n < 1:
        raise PreconditionError("boolean arrangement needs n >= 1")
    return Arrangement.from_normals(n, [_unit(n, i) for i in range(n)])


def zonotope_arrangement(generators: Sequence[Sequence]) -> Arrangement:
    """One hyperplane orthogonal to each generator direction."""
    gens = [as_vector(g) for g in generators]
    if not gens:
        raise PreconditionError("need at least one generator")
    for g in gens:
        if not any(g):
            raise PreconditionError("zero generator")
    return Arrangement.from_normals(len(gens[0]), gens)


@dataclass(frozen=True)
class Flat:
    """Intersection of hyperplanes of an arrangement.

    ``generators`` is the closure: the indices of every hyperplane containing
    the flat. ``subspace`` holds an RREF basis, which doubles as a chart:
    coordinates of a point of the flat are its entries at ``pivots``.
    """

    subspace: Subspace
    generators: frozenset
    key: tuple

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, x in enumerate(b) if x != 0) for b in self.subspace.basis)

    def chart_coordinates(self, x: Sequence) -> tuple:
        return tuple(x[p] for p in self.pivots)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "hyperplanes": sorted(self.generators),
            "constraints": [[str(x) for x in r] for r in self.key],
        }


def _flat_from_normals(a: Arrangement, indices: Iterable[int]) -> Flat:
    n = a.ambient_dim
    normals = [a.hyperplanes[i] for i in indices]
    red, _ = rref(normals, n) if normals else ([], [])
    key = tuple(tuple(r) for r in red)
    sub = Subspace.span(n, _null_basis(red, n))
    closure = frozenset(
        i for i, v in enumerate(a.hyperplanes) if all(sum(x * y for x, y in zip(v, b)) == 0 for b in sub.basis)
    )
    return Flat(sub, closure, key)


def _null_basis(red: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    pivots = [next(i for i, x in enumerate(r) if x != 0) for r in red]
    out = []
    for f in (c for c in range(n) if c not in pivots):
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        out.append(v)
    return out


def lattice_of_flats(a: Arrangement) -> dict[int, list[Flat]]:
    """All flats grouped by dimension, from R^n downward (breadth first)."""
    return {d: list(fs) for d, fs in _lattice(a).items()}


@lru_cache(maxsize=64)
def _lattice(a: Arrangement) -> dict[int, tuple[Flat, ...]]:
    n = a.ambient_dim
    top = _flat_from_normals(a, [])
    by_dim: dict[int, list[Flat]] = {n: [top]}
    seen = {top.key}
    frontier = [top]
    while frontier:
        nxt: list[Flat] = []
        for flat in frontier:
            for i in range(len(a.hyperplanes)):
                if i in flat.generators:
                    continue
                child = _flat_from_normals(a, sorted(flat.generators | {i}))
                if child.key in seen:
                    continue
                seen.add(child.key)
                by_dim.setdefault(child.dim, []).append(child)
                nxt.append(child)
        frontier = nxt
    for d in by_dim:
        by_dim[d].sort(key=lambda f: sorted(f.generators))
    return {d: tuple(by_dim[d]) for d in sorted(by_dim, reverse=True)}


def flats_of_dim(a: Arrangement, k: int) -> list[Flat]:
    return lattice_of_flats(a).get(k, [])


@dataclass(frozen=True)
class CharPoly:
    """chi(t) = sum_k (-1)^(degree-k) a[k] t^k."""

    degree: int
    a: tuple

    def coefficient(self, k: int) -> int:
        if k < 0 or k > self.degree:
            return 0
        return (-1) ** (self.degree - k) * self.a[k]

    def evaluate(self, t) -> int:
        return sum(self.coefficient(k) * t ** k for k in range(self.degree + 1))

    def to_json(self) -> dict:
        return {"degree": self.degree, "a": list(self.a)}


def _from_signed(degree: int, signed: list[int]) -> CharPoly:
    return CharPoly(degree, tuple((-1) ** (degree - k) * c for k, c in enumerate(signed)))


def _whitney(a: Arrangement) -> CharPoly:
    """Sum over all subsets C of (-1)^|C| t^(n - rank C), by depth-first search."""
    n = a.ambient_dim
    signed = [0] * (n + 1)
    normals = [list(v) for v in a.hyperplanes]
    m = len(normals)

    def reduce(v: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
        for p, row in basis:
            if v[p]:
                f, g = row[p], v[p]
                v = [f * x - g * y for x, y in zip(v, row)]
        return v

    def rec(start: int, basis: list, size: int):
        signed[n - len(basis)] += -1 if size % 2 else 1
        for i in range(start, m):
            v = reduce(normals[i], basis)
            piv = next((t for t, x in enumerate(v) if x), None)
            nb = basis if piv is None else basis + [(piv, v)]
            rec(i + 1, nb, size + 1)

    rec(0, [], 0)
    return _from_signed(n, signed)


@lru_cache(maxsize=256)
def _moebius(a: Arrangement) -> CharPoly:
    """Sum over flats X of mu(R^n, X) t^(dim X)."""
    n = a.ambient_dim
    lattice = lattice_of_flats(a)
    flats = [f for d in sorted(lattice, reverse=True) for f in lattice[d]]
    mu: list[int] = []
    signed = [0] * (n + 1)
    for idx, x in enumerate(flats):
        if idx == 0:
            val = 1
        else:
            val = -sum(mu[t] for t in range(idx) if flats[t].generators < x.generators)
        mu.append(val)
        signed[x.dim] += val
    return _from_signed(n, signed)


def characteristic_polynomial(a: Arrangement, method: str = "moebius") -> CharPoly:
    """Characteristic polynomial by the Moebius recursion (default) or the Whitney sum."""
    if method == "whitney":
        return _whitney(a)
    if method == "moebius":
        return _moebius(a)
    raise PreconditionError(f"unknown method {method!r}")


def restriction(a: Arrangement, m: Flat) -> Arrangement:
    """Arrangement {H ∩ M : M not in H} in the RREF chart of the flat."""
    if m.subspace.ambient_dim != a.ambient_dim:
        raise DimensionMismatchError("flat lives in another space")
    check = _flat_from_normals(a, sorted(m.generators))
    if check.key != m.key or check.generators != m.generators:
        raise PreconditionError("not a flat of this arrangement")
    normals = []
    for i, v in enumerate(a.hyperplanes):
        if i in m.generators:
            continue
        w = [sum(x * y for x, y in zip(v, b)) for b in m.subspace.basis]
        normals.append(w)
    return Arrangement.from_normals(m.dim, normals)


def region_count(a: Arrangement) -> int:
    """Number of regions, (-1)^n chi(-1)."""
    return sum(characteristic_polynomial(a).a)


def enumerate_regions(a: Arrangement) -> list[tuple[int, ...]]:
    """Sign vectors of all regions, grown prefix by prefix with LP pruning."""
    n = a.ambient_dim
    normals = [list(v) for v in a.hyperplanes]
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int]):
        i = len(prefix)
        if i == len(normals):
            out.append(tuple(prefix))
            return
        for s in (1, -1):
            rows = [[-sg * x for x in normals[t]] for t, sg in enumerate(prefix + [s])]
            if lp.strictly_feasible(rows, n):
                rec(prefix + [s])

    rec([])
    return out


def region_cone(a: Arrangement, signs: Sequence[int]):
    """Closed region {x : s_i <v_i, x> >= 0} as an HCone."""
    from .cones import HCone

    return HCone.make(a.ambient_dim, (), [[-s * x for x in v] for s, v in zip(signs, a.hyperplanes)])


@dataclass(frozen=True)
class GeneralPositionResult:
    ok: bool
    witness: Flat | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_general_position(s: Subspace, a: Arrangement, flats: dict | None = None) -> GeneralPositionResult:
    """dim(K ∩ s) = max(dim K + dim s - n, 0) for every flat K."""
    if s.ambient_dim != a.ambient_dim:
        raise DimensionMismatchError("subspace and arrangement live in different spaces")
    n = a.ambient_dim
    flats = flats if flats is not None else lattice_of_flats(a)
    for d in sorted(flats, reverse=True):
        for k in flats[d]:
            want = max(k.dim + s.dim - n, 0)
            if intersection_dim(k.subspace, s) != want:
                return GeneralPositionResult(False, k)
    return GeneralPositionResult(True, None)
