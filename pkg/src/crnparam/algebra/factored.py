"""
Products of irreducible polynomial powers with rational exponents
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from .expressions import evaluate, exact, sort_symbols


def _factor_pairs(poly):
    """(constant, [(irreducible factor, multiplicity), ...]) of a nonzero polynomial"""
    if poly == 0:
        raise ValueError("zero has no factorization")
    constant, factors = sp.factor_list(sp.expand(poly))
    return constant, factors


@dataclass(frozen=True)
class Factored:
    """
    constant * prod(factor**e) over irreducible polynomial factors

    Exponents are Fractions; a constant raised to a fractional power is kept
    as a numeric factor so the product stays exact.
    """

    constant: object = sp.Integer(1)
    factors: tuple = ()

    @classmethod
    def from_powers(cls, pairs):
        """
        Build the product of (base, exponent) pairs

        Args:
            pairs: iterable of (sympy rational expression, exponent)
        """
        constant = sp.Integer(1)
        exponents = {}
        for value, exponent in pairs:
            exponent = Fraction(exponent)
            if not exponent:
                continue
            num, den = sp.fraction(sp.together(sp.sympify(value)))
            for poly, e in ((num, exponent), (den, -exponent)):
                scalar, factors = _factor_pairs(poly)
                if e.denominator == 1:
                    constant *= scalar ** int(e)
                elif scalar != 1:
                    exponents[scalar] = exponents.get(scalar, Fraction(0)) + e
                for base, multiplicity in factors:
                    exponents[base] = exponents.get(base, Fraction(0)) + multiplicity * e
        factors = sorted(((b, e) for b, e in exponents.items() if e), key=lambda item: sp.default_sort_key(item[0]))
        return cls(constant, tuple(factors))

    def __mul__(self, other):
        if not isinstance(other, Factored):
            return NotImplemented
        return Factored.from_powers(self._pairs() + other._pairs())

    def __pow__(self, exponent):
        return Factored.from_powers([(b, e * Fraction(exponent)) for b, e in self._pairs()])

    def _pairs(self):
        return ([(self.constant, 1)] if self.constant != 1 else []) + list(self.factors)

    def symbols(self):
        names = {s.name for base, _ in self.factors for s in base.free_symbols}
        return tuple(sort_symbols(names))

    def is_integral(self):
        return all(e.denominator == 1 for _, e in self.factors)

    def split(self):
        """
        Separate integral powers from fractional ones

        Returns:
            (sympy expression of the integral part, ((base, exponent), ...))
        """
        value = self.constant
        radicals = []
        for base, e in self.factors:
            if e.denominator == 1:
                value *= base ** int(e)
            else:
                radicals.append((base, e))
        return value, tuple(radicals)

    def to_rational_function(self):
        value, radicals = self.split()
        if radicals:
            raise ValueError("product has fractional exponents")
        return value

    def to_expression(self):
        """Single sympy expression, fractional powers included"""
        value, radicals = self.split()
        for base, e in radicals:
            value *= base ** exact(e)
        return value

    def evaluate(self, values):
        value, radicals = self.split()
        result = float(evaluate(value, values))
        for base, e in radicals:
            result *= float(evaluate(base, values)) ** float(e)
        return result
