import random

import pytest
from hypothesis import given, strategies as st

from beltpoly import _kernels_py, kernels
from beltpoly.exact_linalg import rank_of_rows

compiled = kernels.compiled
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

ints = st.integers(-6, 6)


@st.composite
def int_matrices(draw, big=False):
    r = draw(st.integers(0, 5))
    c = draw(st.integers(1, 6))
    elem = st.integers(-(10 ** 25), 10 ** 25) if big else ints
    return draw(st.lists(st.lists(elem, min_size=c, max_size=c), min_size=r, max_size=r))


@given(int_matrices())
def test_pure_rank_matches_rref(rows):
    assert _kernels_py.int_rank(rows) == rank_of_rows(rows)


@given(int_matrices(), st.data())
def test_pure_phase1_witness(rows, data):
    # A y = b with b from a nonnegative y is always feasible
    if not rows:
        return
    y = data.draw(st.lists(st.integers(0, 4), min_size=len(rows[0]), max_size=len(rows[0])))
    b = [sum(a * v for a, v in zip(r, y)) for r in rows]
    assert _kernels_py.phase1_feasible(rows, b)


def test_phase1_infeasible():
    assert not _kernels_py.phase1_feasible([[1, 1]], [-1])
    assert not _kernels_py.phase1_feasible([[1, -1], [1, -1]], [1, 2])
    assert _kernels_py.phase1_feasible([], [])


@needs_compiled
@given(int_matrices())
def test_rank_parity(rows):
    assert compiled.int_rank(rows) == _kernels_py.int_rank(rows)


@needs_compiled
@given(int_matrices(), st.lists(ints, min_size=5, max_size=5))
def test_phase1_parity(rows, rhs):
    b = rhs[:len(rows)]
    assert compiled.phase1_feasible(rows, b) == _kernels_py.phase1_feasible(rows, b)


@needs_compiled
@given(int_matrices(big=True))
def test_overflow_fallback_rank(rows):
    assert compiled.int_rank(rows) == _kernels_py.int_rank(rows)


@needs_compiled
def test_overflow_fallback_phase1():
    rng = random.Random(1)
    for _ in range(50):
        rows = [[rng.randint(-10 ** 20, 10 ** 20) for _ in range(5)] for _ in range(3)]
        b = [rng.randint(-10 ** 20, 10 ** 20) for _ in range(3)]
        assert compiled.phase1_feasible(rows, b) == _kernels_py.phase1_feasible(rows, b)


def test_backend_label():
    assert kernels.BACKEND in ("compiled", "python")
