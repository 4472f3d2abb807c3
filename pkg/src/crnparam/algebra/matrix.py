"""
Exact rational matrices on sympy: rank, reduced row echelon form with its
transformation, kernel bases and the RREF-based generalized inverse
"""

from functools import reduce

import numpy as np
import sympy as sp

from .expressions import exact


def rational_matrix(rows, n_cols=None):
    """
    sympy Matrix from rows of ints or Fractions

    The column count is needed only for a matrix without rows.
    """
    rows = [[exact(x) for x in row] for row in rows]
    if n_cols is None:
        if not rows:
            raise ValueError("column count required for a matrix without rows")
        n_cols = len(rows[0])
    if any(len(row) != n_cols for row in rows):
        raise ValueError("matrix rows must all have the same length")
    return sp.Matrix(len(rows), n_cols, [x for row in rows for x in row])


def from_columns(columns, n_rows):
    columns = [[exact(x) for x in col] for col in columns]
    if any(len(col) != n_rows for col in columns):
        raise ValueError("every column needs n_rows entries")
    return sp.Matrix(n_rows, len(columns), [columns[j][i] for i in range(n_rows) for j in range(len(columns))])


def rank(matrix):
    if 0 in matrix.shape:
        return 0
    return matrix.rank()


def rref_with_transform(matrix):
    """
    Reduced row echelon form with the row operations that produce it

    The augmented matrix [A | I] is reduced; its right block records the
    row operations.

    Returns:
        (R, P, pivot_columns) with P * matrix == R and P invertible
    """
    n_rows, n_cols = matrix.shape
    if n_rows == 0:
        return matrix, sp.zeros(0, 0), ()
    reduced, pivots = matrix.row_join(sp.eye(n_rows)).rref()
    return reduced[:, :n_cols], reduced[:, n_cols:], tuple(c for c in pivots if c < n_cols)


def generalized_inverse(matrix):
    """
    Generalized inverse H with matrix * H * matrix == matrix

    H = Q * P where P brings the matrix to reduced row echelon form and Q
    selects the pivot rows, every free variable being set to zero.
    """
    n_rows, n_cols = matrix.shape
    _, transform, pivots = rref_with_transform(matrix)
    selector = sp.zeros(n_cols, n_rows)
    for row_index, c in enumerate(pivots):
        selector[c, row_index] = 1
    return selector * transform if n_rows else selector


def _normalize_integer(vector):
    """Scale to integers with content 1 and a positive last nonzero entry"""
    denominator = reduce(sp.ilcm, (sp.Rational(x).q for x in vector), 1)
    ints = [int(x * denominator) for x in vector]
    content = reduce(sp.igcd, ints, 0) or 1
    last = next(x for x in reversed(ints) if x)
    sign = 1 if last > 0 else -1
    return [sign * x // content for x in ints]


def kernel_basis(matrix):
    """
    Basis of the right kernel as matrix columns

    Columns are integral with content 1 and the last nonzero entry positive,
    one column per free variable of the reduced row echelon form.
    """
    n_cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        vectors = [[int(i == j) for i in range(n_cols)] for j in range(n_cols)]
    else:
        vectors = [_normalize_integer(list(v)) for v in matrix.nullspace()]
    return from_columns(vectors, n_cols)


def same_column_space(a, b):
    """Mutual containment of column spaces, decided by ranks"""
    if a.shape[0] != b.shape[0]:
        return False
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(a.row_join(b))


def to_lists(matrix):
    """Entries as ints where integral, else "p/q" strings"""
    return [[int(x) if x.is_Integer else str(x) for x in matrix.row(i)] for i in range(matrix.shape[0])]


def to_numpy(matrix):
    return np.array([[float(x) for x in matrix.row(i)] for i in range(matrix.shape[0])], dtype=float).reshape(
        matrix.shape
    )
