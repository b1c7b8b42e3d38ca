import numpy as np
import pytest

from tokenlap.errors import (
    MatrixDimensionError,
    MatrixOverflowError,
    NonIntegerSolutionError,
    SingularMatrixError,
)
from tokenlap.matrix import (
    INT64_MAX,
    SparseIntMatrix,
    exact_rank,
    exact_solve,
    mat_add,
    mat_eq,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_transpose,
)


def test_zero_entries_are_dropped():
    m = SparseIntMatrix(2, 2, {0: {0: 0, 1: 3}, 1: {0: 0}})
    assert m.nnz == 1
    assert m.to_dense() == [[0, 3], [0, 0]]


def test_arithmetic():
    a = SparseIntMatrix.from_rows([[1, 2], [3, 4]])
    b = SparseIntMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_dense() == [[2, 1], [4, 3]]
    assert (a + b).to_dense() == [[1, 3], [4, 4]]
    assert (a - a).nnz == 0
    assert (-a).to_dense() == [[-1, -2], [-3, -4]]
    assert a.scale(3).to_dense() == [[3, 6], [9, 12]]
    assert a.T.to_dense() == [[1, 3], [2, 4]]
    assert a.trace() == 5


def test_functional_forms_match_operators():
    a = SparseIntMatrix.from_rows([[1, 0, 2], [0, -1, 0]])
    b = SparseIntMatrix.from_rows([[1, 1], [0, 2], [3, 0]])
    assert mat_eq(mat_mul(a, b), a @ b)
    assert mat_mul(a, b).to_dense() == [[7, 1], [0, -2]]
    assert mat_transpose(b).to_dense() == [[1, 0, 3], [1, 2, 0]]
    assert mat_eq(mat_sub(mat_add(a, a), a), a)
    assert mat_eq(mat_scale(a, -2), -a - a)
    assert not mat_eq(a, a.scale(2))


def test_shape_mismatch():
    a = SparseIntMatrix.from_rows([[1, 2, 3]])
    with pytest.raises(MatrixDimensionError):
        a @ a
    with pytest.raises(MatrixDimensionError):
        a + a.T


def test_overflow_is_detected():
    big = SparseIntMatrix.diagonal([INT64_MAX // 2 + 1, 1])
    with pytest.raises(MatrixOverflowError):
        big + big


def test_first_difference_is_row_major():
    a = SparseIntMatrix.from_rows([[1, 0], [0, 1]])
    b = SparseIntMatrix.from_rows([[1, 0], [5, 2]])
    assert a.first_difference(b) == (1, 0, 0)
    assert a.first_difference(a) is None


def test_ones_identity_and_symmetry():
    j = SparseIntMatrix.ones(3, 3)
    assert j.row_sums() == [3, 3, 3]
    assert j.is_symmetric()
    assert (SparseIntMatrix.identity(3) @ j) == j


def test_apply_matches_numpy():
    a = SparseIntMatrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
    v = np.array([1.0, 0.5, -2.0])
    assert np.allclose(a.apply(v), a.to_numpy() @ v)


def test_exact_rank():
    assert exact_rank(SparseIntMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert exact_rank(SparseIntMatrix.from_rows([[0, 1, 2], [1, 0, 3], [1, 1, 5]])) == 2
    assert exact_rank(SparseIntMatrix.identity(4)) == 4
    assert exact_rank(SparseIntMatrix(3, 3)) == 0


def test_exact_solve_with_pivoting():
    a = SparseIntMatrix.from_rows([[0, 2], [3, 1]])
    x = SparseIntMatrix.from_rows([[1, -2], [4, 0]])
    assert exact_solve(a, a @ x) == x


def test_exact_solve_singular():
    with pytest.raises(SingularMatrixError):
        exact_solve(SparseIntMatrix.from_rows([[1, 2], [2, 4]]), SparseIntMatrix.identity(2))


def test_exact_solve_fractional_solution():
    with pytest.raises(NonIntegerSolutionError):
        exact_solve(SparseIntMatrix.diagonal([2, 1]), SparseIntMatrix.identity(2))
