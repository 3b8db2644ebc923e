import pytest
from hypothesis import given, settings, strategies as st

from beltpoly.arrangements import boolean_arrangement, braid_arrangement, type_b_arrangement
from beltpoly.errors import NotCertifiedError, PreconditionError
from beltpoly.exact_linalg import RationalMatrix, random_rational_matrix
from beltpoly.permutohedra import PermutohedronA, PermutohedronB, face_vector
from beltpoly.projection import (
    BeltPolytopeByArrangement,
    ProjectionSetup,
    certify_general_position,
    count_projected_faces_belt,
    count_projected_faces_formula,
    count_projected_faces_formula_a,
    count_projected_faces_formula_b,
    count_projected_faces_oracle,
    cube_face_count,
    face_count_report,
)

P3A = PermutohedronA((3, 2, 1))


def test_certificate_examples():
    ok = certify_general_position(P3A, RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0]]))
    assert ok.passed and ok.agree
    bad = certify_general_position(P3A, RationalMatrix.from_rows([[1, 1, -2]]))
    assert not bad.passed and bad.agree
    assert bad.g2_witness.subspace.contains((1, 1, 0))
    p4 = PermutohedronA((4, 3, 2, 1))
    for seed in (0, 1, 2, 3, 4):
        cert = certify_general_position(p4, random_rational_matrix(2, 4, seed, 1000))
        assert cert.passed and cert.agree


def test_certificate_rank_deficient():
    with pytest.raises(PreconditionError):
        certify_general_position(P3A, RationalMatrix.from_rows([[1, 0, 0], [2, 0, 0]]))


def test_uncertified_setup_refuses():
    setup = ProjectionSetup.create(P3A, RationalMatrix.from_rows([[1, 1, -2]]))
    with pytest.raises(NotCertifiedError):
        count_projected_faces_oracle(setup, 0)
    with pytest.raises(NotCertifiedError):
        face_count_report(setup)


def test_oracle_examples():
    assert count_projected_faces_oracle(ProjectionSetup.random(P3A, 2, 1), 0) == 6
    assert count_projected_faces_oracle(ProjectionSetup.random(PermutohedronA((4, 3, 2, 1)), 2, 1), 0) == 12
    assert count_projected_faces_oracle(ProjectionSetup.random(PermutohedronB((3, 2, 1)), 2, 1), 1) == 18


def test_formula_examples():
    assert count_projected_faces_formula_a(3, 2, 0) == 6
    assert count_projected_faces_formula_a(3, 2, 1) == 6
    assert count_projected_faces_formula_a(4, 2, 0) == 12
    assert count_projected_faces_formula_a(4, 2, 1) == 12
    assert count_projected_faces_formula_a(4, 3, 0) == 24
    assert count_projected_faces_formula_b(3, 2, 0) == 18
    assert count_projected_faces_formula_b(3, 2, 1) == 18
    assert count_projected_faces_formula_b(2, 1, 0) == 2
    assert count_projected_faces_formula_b(3, 3, 0) == 48
    with pytest.raises(PreconditionError):
        count_projected_faces_formula_a(3, 3, 0)
    with pytest.raises(PreconditionError):
        count_projected_faces_formula_b(3, 2, 2)


def test_segment_projection_by_oracle():
    p = PermutohedronB((2, 1))
    assert count_projected_faces_oracle(ProjectionSetup.random(p, 1, 3), 0) == 2


def test_belt_examples():
    assert count_projected_faces_belt(boolean_arrangement(3), 3, 2, 0) == 6 == cube_face_count(3, 2, 0)
    assert count_projected_faces_belt(braid_arrangement(4), 3, 2, 0) == 12
    assert count_projected_faces_belt(type_b_arrangement(3), 3, 2, 1) == 18


def test_belt_oracle_matches_formula():
    p = BeltPolytopeByArrangement(boolean_arrangement(3))
    setup = ProjectionSetup.random(p, 2, 5)
    assert not setup.certificate.g1_checked
    for j in range(2):
        assert count_projected_faces_oracle(setup, j) == count_projected_faces_formula(p, 2, j)


def test_report_json():
    rep = face_count_report(ProjectionSetup.random(P3A, 2, 0))
    doc = rep.to_json()
    assert doc["counts"] == {"j0": {"formula": 6, "oracle": 6}, "j1": {"formula": 6, "oracle": 6}}
    assert doc["agreement"] is True


def test_full_rank_projection_preserves_faces():
    for p in (PermutohedronA((4, 3, 2, 1)), PermutohedronB((3, 2, 1))):
        fv = face_vector(p)
        assert [count_projected_faces_formula(p, p.dim, j) for j in range(p.dim)] == fv[:p.dim]


@given(st.integers(3, 7), st.data())
def test_euler_relation_on_projections_a(n, data):
    d = data.draw(st.integers(1, n - 1))
    f = [count_projected_faces_formula_a(n, d, j) for j in range(d)]
    assert sum((-1) ** j * v for j, v in enumerate(f)) == 1 - (-1) ** d
    assert f[0] <= face_vector(PermutohedronA(range(n, 0, -1)))[0]


@given(st.integers(1, 6), st.data())
def test_euler_relation_on_projections_b(n, data):
    d = data.draw(st.integers(1, n))
    f = [count_projected_faces_formula_b(n, d, j) for j in range(d)]
    assert sum((-1) ** j * v for j, v in enumerate(f)) == 1 - (-1) ** d


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6))
def test_oracle_is_matrix_independent(seed):
    p = PermutohedronA((4, 3, 2, 1))
    setup = ProjectionSetup.random(p, 2, seed)
    if setup.certificate.passed:
        assert [count_projected_faces_oracle(setup, j) for j in range(2)] == [12, 12]


def test_threads_invariance():
    setup = ProjectionSetup.random(PermutohedronB((3, 2, 1)), 2, 11)
    one = [count_projected_faces_oracle(setup, j, threads=1) for j in range(2)]
    three = [count_projected_faces_oracle(setup, j, threads=3) for j in range(2)]
    assert one == three == [18, 18]
