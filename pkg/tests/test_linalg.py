from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hhquiver import linalg
from hhquiver.linalg import RationalMatrix

from helpers import rank_by_minors


def M(rows):
    return RationalMatrix.from_rows(rows)


def test_rank_examples():
    assert linalg.rank(RationalMatrix.identity(2)) == 2
    assert linalg.rank(RationalMatrix.zeros(3, 4)) == 0
    assert linalg.rank(M([[1, 2], [2, 4]])) == 1


def test_kernel_dim_examples():
    assert linalg.kernel_dim(RationalMatrix.identity(2)) == 0
    assert linalg.kernel_dim(RationalMatrix.zeros(3, 4)) == 4
    assert linalg.kernel_dim(M([[1, 2], [2, 4]])) == 1


def test_entries_are_normalized_and_exact():
    m = M([[Fraction(2, 4), "3/6"], [-1, 0]])
    assert m[0, 0] == Fraction(1, 2) and m[0, 0].denominator == 2
    with pytest.raises(TypeError):
        M([[0.5]])


def test_matrix_algebra():
    a = M([[1, 2], [3, 4]])
    assert a @ RationalMatrix.identity(2) == a
    assert (a + a) == a.scale(2)
    assert a.transpose().transpose() == a
    assert (a @ a).to_lists() == [[7, 10], [15, 22]]


def test_nullspace_vectors_are_in_kernel():
    rows = [[Fraction(x) for x in r] for r in [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]]
    basis = linalg.nullspace(rows, 4)
    assert len(basis) == 4 - linalg.rank(rows)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_column_space_complement():
    span = [[Fraction(1), Fraction(0), Fraction(0)]]
    cands = [[Fraction(2), Fraction(0), Fraction(0)], [Fraction(1), Fraction(1), Fraction(0)],
             [Fraction(0), Fraction(3), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]
    assert linalg.column_space_complement(span, cands, 3) == [1, 3]


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, max_side=6):
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    return [[Fraction(draw(small_ints)) for _ in range(c)] for _ in range(r)]


@st.composite
def low_rank_matrices(draw, max_side=8):
    """Products of thin factors, so rank deficiency is common."""
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    k = draw(st.integers(0, min(r, c)))
    u = [[draw(small_ints) for _ in range(k)] for _ in range(r)]
    v = [[draw(small_ints) for _ in range(c)] for _ in range(k)]
    return [[Fraction(sum(u[i][t] * v[t][j] for t in range(k))) for j in range(c)] for i in range(r)]


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_rank_of_transpose(m):
    t = [list(col) for col in zip(*m)]
    assert linalg.rank(m) == linalg.rank(t)


@given(matrices(), st.randoms(use_true_random=False), st.fractions(min_value=-5, max_value=5))
@settings(max_examples=80, deadline=None)
def test_rank_invariances(m, rnd, scale):
    r = linalg.rank(m)
    rows = list(m)
    rnd.shuffle(rows)
    perm = list(range(len(m[0])))
    rnd.shuffle(perm)
    permuted = [[row[j] for j in perm] for row in rows]
    assert linalg.rank(permuted) == r
    if scale:
        scaled = [list(row) for row in m]
        scaled[0] = [scale * x for x in scaled[0]]
        assert linalg.rank(scaled) == r


@given(low_rank_matrices())
@settings(max_examples=60, deadline=None)
def test_rank_matches_minor_enumeration(m):
    assert linalg.rank(m) == rank_by_minors(m)


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    mat = RationalMatrix.from_rows(m)
    assert mat.rank() + mat.kernel_dim() == mat.cols
    assert mat.rank() <= min(mat.rows, mat.cols)
    red, piv = linalg.rref(m)
    assert len(piv) == mat.rank()
