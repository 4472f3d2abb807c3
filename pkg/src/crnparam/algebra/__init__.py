"""
Exact rational linear algebra and rate-expression helpers on sympy
"""

from .determinant import determinant
from .expressions import (
    degree_in,
    evaluate,
    exact,
    from_text,
    has_positive_coefficients,
    numerator_denominator,
    rf_equal,
    sort_symbols,
    symbol,
    symbol_key,
    symbols_of,
    to_fraction,
    to_text,
)
from .factored import Factored
from .matrix import (
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

__all__ = [
    "Factored",
    "degree_in",
    "determinant",
    "evaluate",
    "exact",
    "from_columns",
    "from_text",
    "generalized_inverse",
    "has_positive_coefficients",
    "kernel_basis",
    "numerator_denominator",
    "rank",
    "rational_matrix",
    "rf_equal",
    "rref_with_transform",
    "same_column_space",
    "sort_symbols",
    "symbol",
    "symbol_key",
    "symbols_of",
    "to_fraction",
    "to_lists",
    "to_numpy",
    "to_text",
]
