"""
Determinants of square matrices of rate expressions
"""

import sympy as sp

METHODS = ("bareiss", "laplace")


def determinant(matrix, method="bareiss"):
    """
    Expanded determinant of a square matrix of sympy expressions

    Args:
        matrix: sequence of rows, or a sympy Matrix
        method: "bareiss" (fraction-free elimination) or "laplace"
            (cofactor expansion)
    """
    if method not in METHODS:
        raise ValueError(f"unknown determinant method {method!r}")
    rows = [list(row) for row in (matrix.tolist() if isinstance(matrix, sp.MatrixBase) else matrix)]
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("determinant needs a square matrix")
    if not rows:
        return sp.Integer(1)
    return sp.expand(sp.Matrix(rows).det(method=method))
