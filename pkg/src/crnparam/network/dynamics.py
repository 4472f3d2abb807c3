"""
Symbolic mass-action ODE right-hand sides and graph Laplacians
"""

import numpy as np
import sympy as sp

from ..algebra import evaluate, exact, symbol, symbols_of
from .model import EdgeKind


def _format_monomial(species, exponents):
    factors = []
    for name, e in zip(species, exponents):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


class OdeExpression:
    """
    Canonical right-hand side: species name -> {exponent vector -> rate polynomial}

    The expanded sympy polynomial in rate symbols multiplies the species
    monomial x**exponents; exponent vectors follow the species order. Zero
    entries are dropped.
    """

    def __init__(self, species, terms):
        self.species = tuple(species)
        clean = {}
        for name, monomials in terms.items():
            kept = {tuple(exps): sp.expand(poly) for exps, poly in monomials.items()}
            kept = {exps: poly for exps, poly in kept.items() if poly != 0}
            if kept:
                clean[name] = kept
        self._terms = clean

    def components(self):
        return {name: dict(monomials) for name, monomials in self._terms.items()}

    def is_zero(self):
        return not self._terms

    def symbols(self):
        names = set()
        for monomials in self._terms.values():
            for poly in monomials.values():
                names.update(symbols_of(poly))
        return names

    def __eq__(self, other):
        if not isinstance(other, OdeExpression):
            return NotImplemented
        return self.species == other.species and self._terms == other._terms

    __hash__ = None

    def __sub__(self, other):
        if self.species != other.species:
            raise ValueError("expressions over different species orders")
        terms = self.components()
        for name, monomials in other._terms.items():
            target = terms.setdefault(name, {})
            for exps, poly in monomials.items():
                target[exps] = target.get(exps, sp.Integer(0)) - poly
        return OdeExpression(self.species, terms)

    def substitute(self, mapping):
        """Replace rate symbols by expressions, e.g. merged rates by their sums"""
        replacements = {symbol(name): value for name, value in mapping.items()}
        return OdeExpression(
            self.species,
            {
                name: {exps: poly.xreplace(replacements) for exps, poly in monomials.items()}
                for name, monomials in self._terms.items()
            },
        )

    def evaluate(self, x, rates):
        """
        Numeric right-hand side at concentrations x

        Returns:
            (values, scale): values per species in species order and the
            largest absolute additive term over all species
        """
        x = np.asarray(x, dtype=float)
        values = np.zeros(len(self.species))
        scale = 0.0
        for name, monomials in self._terms.items():
            s = self.species.index(name)
            for exps, poly in monomials.items():
                power = float(np.prod(x ** np.array([float(e) for e in exps])))
                for term in sp.Add.make_args(poly):
                    value = float(evaluate(term, rates)) * power
                    values[s] += value
                    scale = max(scale, abs(value))
        return values, scale

    def format(self):
        lines = []
        for name in self.species:
            monomials = self._terms.get(name)
            if not monomials:
                lines.append(f"d{name}/dt = 0")
                continue
            parts = []
            for exps in sorted(monomials):
                rate = sp.sstr(monomials[exps])
                if isinstance(monomials[exps], sp.Add):
                    rate = f"({rate})"
                mono = _format_monomial(self.species, exps)
                parts.append(f"{rate}*{mono}" if mono else rate)
            lines.append(f"d{name}/dt = " + " + ".join(parts))
        return "\n".join(lines)

    def __str__(self):
        return self.format()


def ode_rhs(net):
    """
    f_s = sum over effective edges i->j of k * x**ỹ(i) * (y(j)_s - y(i)_s)
    """
    terms = {}
    for edge in net.edges:
        if edge.kind is EdgeKind.PHANTOM:
            continue
        source, target = net.vertex(edge.source), net.vertex(edge.target)
        change = (target.stoich - source.stoich).coefficients
        exps = source.kinetic.vector(net.n_species)
        rate = symbol(edge.name)
        for s, c in change:
            monomials = terms.setdefault(net.species[s], {})
            monomials[exps] = monomials.get(exps, sp.Integer(0)) + exact(c) * rate
    return OdeExpression(net.species, terms)


def laplacian(net):
    """
    A_k = I_E diag(k) (I_E^s)^T as a sympy Matrix in vertex order

    Entry (j, i) sums the labels of edges i -> j; columns sum to zero.
    """
    m = net.n_vertices
    matrix = sp.zeros(m, m)
    for edge in net.edges:
        i, j = net.vertex_index(edge.source), net.vertex_index(edge.target)
        rate = symbol(edge.name)
        matrix[j, i] += rate
        matrix[i, i] -= rate
    return matrix


def laplacian_values(net, rates):
    """Numeric Laplacian for a mapping of rate values"""
    m = net.n_vertices
    matrix = np.zeros((m, m))
    for edge in net.edges:
        i, j = net.vertex_index(edge.source), net.vertex_index(edge.target)
        value = float(rates[edge.name])
        matrix[j, i] += value
        matrix[i, i] -= value
    return matrix
