from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from beltpoly.combinatorics import OrderedPartition, SignedOrderedPartition
from beltpoly.cones import dual_cone, same_cone
from beltpoly.errors import NotAZonotopeError, PreconditionError
from beltpoly.permutohedra import (
    FaceDescriptor,
    PermutohedronA,
    PermutohedronB,
    contains,
    contains_a,
    contains_b,
    enumerate_faces,
    face_vector,
    face_vertices,
    is_zonotope,
    minkowski_vertices,
    normal_cone,
    signed_permutation_directions,
    tangent_cone,
    two_faces_symmetric,
    zonotope_generators_b,
)

P3A = PermutohedronA((3, 2, 1))
P2B = PermutohedronB((2, 1))
P3B = PermutohedronB((3, 2, 1))


def test_validation():
    with pytest.raises(PreconditionError):
        PermutohedronA((1, 2))
    with pytest.raises(PreconditionError):
        PermutohedronB((2, 0))


def test_rado_membership():
    assert contains_a(P3A, (2, 2, 2))
    assert not contains_a(P3A, (Fraction(7, 2), Fraction(3, 2), 1))
    assert contains_a(P3A, (3, 2, 1))
    assert contains_b(P2B, (0, 0))
    assert not contains_b(P2B, (2, 2))
    assert contains_b(P2B, (-2, 1))


def test_face_enumeration_a():
    edge = FaceDescriptor("A", OrderedPartition(3, ((1,), (2, 3))), 1, 2)
    assert set(face_vertices(P3A, edge)) == {(3, 2, 1), (3, 1, 2)}
    verts = [v for f in enumerate_faces(P3A, 0) for v in face_vertices(P3A, f)]
    assert len(verts) == 6 and set(verts) == {(a, b, c) for a in (1, 2, 3) for b in (1, 2, 3)
                                               for c in (1, 2, 3) if len({a, b, c}) == 3}
    assert len(list(enumerate_faces(P3A, 2))) == 1


def test_face_enumeration_b():
    verts = {v for f, vs in enumerate_faces(P2B, 0, vertices=True) for v in vs}
    assert len(verts) == 8
    assert len(list(enumerate_faces(P2B, 1))) == 8
    assert len(list(enumerate_faces(P3B, 2))) == 26


def test_face_vectors():
    assert face_vector(P3A) == [6, 6, 1]
    assert face_vector(P3B) == [48, 72, 26, 1]
    assert face_vector(PermutohedronA((2, 1))) == [2, 1]


def test_normal_cone_examples():
    f = FaceDescriptor("A", OrderedPartition(3, ((1,), (2, 3))), 1, 2)
    c = normal_cone(P3A, f)
    assert c.contains((2, 1, 1)) and not c.contains((1, 2, 2)) and not c.contains((3, 2, 1))
    f = FaceDescriptor("B", SignedOrderedPartition(2, ((1,),), (2,), (1, 0)), 1, 2)
    c = normal_cone(P2B, f)
    assert c.contains((1, 0)) and not c.contains((-1, 0)) and not c.contains((1, 1))


def test_tangent_cone_examples():
    f = FaceDescriptor("A", OrderedPartition(3, ((1,), (2, 3))), 1, 2)
    t = tangent_cone(P3A, f)
    assert t.contains((-1, 1, 0)) and not t.contains((1, -1, 0)) and not t.contains((0, 0, 1))
    top = next(enumerate_faces(P3A, 2))
    t = tangent_cone(P3A, top)
    assert t.contains((1, -1, 0)) and t.contains((-1, 1, 0)) and not t.contains((1, 0, 0))
    f = FaceDescriptor("B", SignedOrderedPartition(2, ((1, 2),), (), (1, 1)), 1, 2)
    t = tangent_cone(P2B, f)
    assert t.contains((-1, 0)) and t.contains((1, -1)) and not t.contains((1, 0))


def test_foreign_descriptor():
    f = next(enumerate_faces(P2B, 0))
    with pytest.raises(PreconditionError):
        normal_cone(P3A, f)


@pytest.mark.parametrize("p", [PermutohedronA((4, 3, 2, 1)), PermutohedronB((4, 3, 2, 1))])
def test_tangent_and_normal_cones_are_dual(p):
    for j in range(p.dim + 1):
        for f in enumerate_faces(p, j):
            assert same_cone(dual_cone(tangent_cone(p, f)), normal_cone(p, f))


def test_zonotopes():
    assert is_zonotope(PermutohedronA((4, 3, 2, 1)))
    assert not is_zonotope(PermutohedronA((4, 2, 1)))
    assert is_zonotope(P3B)
    assert len(zonotope_generators_b(P2B)) == 4
    gens = zonotope_generators_b(P3B)
    assert len(gens) == 9
    verts = {v for f, vs in enumerate_faces(P3B, 0, vertices=True) for v in vs}
    assert minkowski_vertices(gens, signed_permutation_directions(3)) == verts
    assert zonotope_generators_b(PermutohedronB((5,))) == [(5,)]
    with pytest.raises(NotAZonotopeError):
        zonotope_generators_b(PermutohedronB((4, 2, 1)))


def test_two_face_symmetry():
    assert two_faces_symmetric(PermutohedronA((4, 3, 2, 1)))[0]
    ok, witness = two_faces_symmetric(PermutohedronA((5, 3, 2, 1)))
    assert not ok and witness is not None
    assert two_faces_symmetric(P3B)[0]
    assert not two_faces_symmetric(PermutohedronB((4, 2, 1)))[0]


@st.composite
def decreasing(draw, positive=False, n=None):
    n = n or draw(st.integers(2, 4))
    gaps = draw(st.lists(st.integers(1, 5), min_size=n, max_size=n))
    low = draw(st.integers(1 if positive else -5, 5))
    xs = [low + sum(gaps[i + 1:]) for i in range(n)]
    return xs


@given(decreasing())
def test_euler_relation_a(x):
    p = PermutohedronA(x)
    fv = face_vector(p)
    assert sum((-1) ** j * f for j, f in enumerate(fv)) == 1
    assert [len(list(enumerate_faces(p, j))) for j in range(p.dim + 1)] == fv


@given(decreasing(positive=True, n=3))
def test_euler_relation_b(x):
    p = PermutohedronB(x)
    fv = face_vector(p)
    assert sum((-1) ** j * f for j, f in enumerate(fv)) == 1
    assert [len(list(enumerate_faces(p, j))) for j in range(p.dim + 1)] == fv


@given(decreasing(), st.data())
def test_vertex_containment_and_perturbation(x, data):
    p = PermutohedronA(x)
    verts = [v for f, vs in enumerate_faces(p, 0, vertices=True) for v in vs]
    weights = data.draw(st.lists(st.integers(0, 3), min_size=len(verts), max_size=len(verts))
                        .filter(any))
    total = sum(weights)
    point = tuple(sum(Fraction(w, total) * v[i] for w, v in zip(weights, verts)) for i in range(p.n))
    assert contains(p, point)
    v = verts[data.draw(st.integers(0, len(verts) - 1))]
    hi, lo = v.index(max(v)), v.index(min(v))
    eps = Fraction(1, 100)
    pushed = list(v)
    pushed[hi] += eps
    pushed[lo] -= eps
    assert not contains(p, pushed)


@given(decreasing(positive=True))
def test_vertex_perturbation_b(x):
    p = PermutohedronB(x)
    for f, vs in enumerate_faces(p, 0, vertices=True):
        v = vs[0]
        assert contains(p, v)
        out = [c + (Fraction(1, 100) if c > 0 else -Fraction(1, 100)) if abs(c) == max(map(abs, v)) else c
               for c in v]
        assert not contains(p, out)
