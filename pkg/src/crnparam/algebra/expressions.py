"""
Rate expressions as sympy objects: positive symbols, natural ordering,
exact comparison, evaluation and text round trips
"""

import re
from fractions import Fraction
from functools import lru_cache

import sympy as sp

_NAME_PARTS = re.compile(r"(\d+)")
_IDENTIFIER = re.compile(r"\b[A-Za-z_]\w*\b(?!\s*\()")


@lru_cache(maxsize=None)
def symbol_key(name):
    """Natural order key: k2 < k10 < phi < phi1"""
    return tuple(int(part) if part.isdigit() else part for part in _NAME_PARTS.split(name) if part)


def sort_symbols(names):
    return sorted(names, key=symbol_key)


@lru_cache(maxsize=None)
def symbol(name):
    """
    The positive sympy Symbol for a rate, phantom or τ name

    Every symbol in the package is created here; sympy treats symbols with
    different assumptions as different, so constructing them elsewhere breaks
    equality.
    """
    return sp.Symbol(name, positive=True)


def exact(value):
    """int, Fraction or sympy number -> sympy Rational"""
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.sympify(value)


def to_fraction(value):
    """sympy Rational, int or Fraction -> Fraction"""
    if isinstance(value, Fraction):
        return value
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


def symbols_of(expr):
    return tuple(sort_symbols(s.name for s in sp.sympify(expr).free_symbols))


def numerator_denominator(expr):
    """(numerator, denominator) over a common denominator, common factors cancelled"""
    return sp.fraction(sp.cancel(sp.together(expr)))


def rf_equal(a, b):
    """Exact equality of rational functions by cross-multiplication"""
    na, da = sp.fraction(sp.together(sp.sympify(a)))
    nb, db = sp.fraction(sp.together(sp.sympify(b)))
    return sp.expand(na * db - nb * da) == 0


def _coefficients(poly):
    return sp.expand(poly).as_coefficients_dict().values()


def has_positive_coefficients(expr):
    """True when numerator and denominator are nonzero with only positive coefficients"""
    num, den = sp.fraction(sp.together(sp.sympify(expr)))
    if num == 0:
        return False
    return all(c > 0 for c in _coefficients(num)) and all(c > 0 for c in _coefficients(den))


def degree_in(expr, name):
    """Degree of a polynomial expression in one symbol; -1 for zero"""
    expr = sp.expand(expr)
    if expr == 0:
        return -1
    return int(sp.degree(expr, symbol(name)))


def _number(value):
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return sp.Integer(value)
    return sp.Float(float(value))


@lru_cache(maxsize=4096)
def _compiled(expr):
    names = symbols_of(expr)
    return names, sp.lambdify([symbol(n) for n in names], expr, modules="math")


def evaluate(expr, values):
    """
    Numeric value at the given symbol values

    Exact inputs (int and Fraction) give a Fraction; otherwise the value is
    a float computed from a lambdified function.

    Raises:
        ValueError: a free symbol has no value
        ZeroDivisionError: a denominator vanishes
    """
    expr = sp.sympify(expr)
    names = symbols_of(expr)
    missing = [n for n in names if n not in values]
    if missing:
        raise ValueError(f"no value for symbol {missing[0]}")
    if all(isinstance(values[n], (int, Fraction)) for n in names):
        result = expr.xreplace({symbol(n): _number(values[n]) for n in names})
        if result.has(sp.zoo, sp.nan):
            raise ZeroDivisionError(f"{expr} is undefined at the given values")
        if result.is_Rational:
            return Fraction(int(result.p), int(result.q))
        return float(result)
    names, function = _compiled(expr)
    return float(function(*(float(values[n]) for n in names)))


def to_text(expr):
    return sp.sstr(expr)


def from_text(text):
    """Parse an expression written by to_text, binding names to package symbols"""
    local = {name: symbol(name) for name in _IDENTIFIER.findall(text)}
    return sp.parse_expr(text, local_dict=local)
