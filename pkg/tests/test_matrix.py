from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings

from crnparam.algebra import (
    from_columns,
    generalized_inverse,
    kernel_basis,
    rank,
    rational_matrix,
    rref_with_transform,
    same_column_space,
    to_lists,
    to_numpy,
)

from strategies import rational_matrices

# Columns of the star forest 1->2, 1->3, 1->4 on the translated histidine network
HISTIDINE_M = rational_matrix([[-1, 0, -1], [1, 0, 0], [1, 0, 0], [0, 1, 1]])


def test_shape_is_kept_for_empty_matrices():
    empty = rational_matrix([], 3)
    assert empty.shape == (0, 3)
    assert empty.T.shape == (3, 0)
    assert from_columns([], 4).shape == (4, 0)
    assert from_columns([[1, 2]], 2) == sp.Matrix([[1], [2]])


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        rational_matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        rational_matrix([])


def test_fraction_entries_are_exact():
    a = rational_matrix([[Fraction(1, 2), 2]])
    assert a[0, 0] == sp.Rational(1, 2)


def test_rank():
    assert rank(HISTIDINE_M) == 3
    assert rank(rational_matrix([[1, 2], [2, 4]])) == 1
    assert rank(sp.zeros(3, 3)) == 0
    assert rank(rational_matrix([], 3)) == 0
    assert rank(rational_matrix([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1


def test_rref_transform():
    a = rational_matrix([[2, 4, 1], [1, 2, 0], [3, 6, 1]])
    reduced, transform, pivots = rref_with_transform(a)
    assert transform * a == reduced
    assert transform.det() != 0
    assert pivots == (0, 2)
    assert list(reduced.row(0)) == [1, 2, 0]
    assert list(reduced.row(1)) == [0, 0, 1]
    assert list(reduced.row(2)) == [0, 0, 0]


def test_generalized_inverse_on_histidine():
    mt = HISTIDINE_M.T
    h = generalized_inverse(mt)
    assert h.shape == (4, 3)
    assert mt * h * mt == mt


def test_kernel_basis_normalization():
    b = kernel_basis(HISTIDINE_M.T)
    assert b.shape == (4, 1)
    assert list(b.col(0)) == [0, -1, 1, 0]
    assert (HISTIDINE_M.T * b).is_zero_matrix


def test_kernel_of_full_rank_matrix_is_empty():
    assert kernel_basis(sp.eye(3)).shape == (3, 0)


def test_kernel_of_matrix_without_rows():
    assert kernel_basis(rational_matrix([], 2)) == sp.eye(2)


def test_same_column_space():
    a = rational_matrix([[1, 0], [0, 1], [1, 1]])
    b = rational_matrix([[1, 1], [1, -1], [2, 0]])
    assert same_column_space(a, b)
    assert not same_column_space(a, rational_matrix([[1], [0], [0]]))
    assert not same_column_space(a, rational_matrix([[1, 0], [0, 1]]))


def test_to_lists_and_numpy():
    a = rational_matrix([[Fraction(1, 2), 2]])
    assert to_lists(a) == [["1/2", 2]]
    np.testing.assert_allclose(to_numpy(a), [[0.5, 2.0]])
    assert to_numpy(rational_matrix([], 2)).shape == (0, 2)


@settings(max_examples=50)
@given(rational_matrices())
def test_generalized_inverse_property(a):
    h = generalized_inverse(a)
    assert h.shape == (a.cols, a.rows)
    assert a * h * a == a


@settings(max_examples=50)
@given(rational_matrices())
def test_kernel_basis_properties(a):
    b = kernel_basis(a)
    assert b.cols == a.cols - rank(a)
    assert (a * b).is_zero_matrix
    assert rank(b) == b.cols
    for c in range(b.cols):
        column = list(b.col(c))
        assert all(value.is_Integer for value in column)
        assert next(value for value in reversed(column) if value) > 0


@settings(max_examples=50)
@given(rational_matrices())
def test_rank_matches_numpy(a):
    assert rank(a) == np.linalg.matrix_rank(to_numpy(a))
