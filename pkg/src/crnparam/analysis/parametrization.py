"""
Equilibrium parametrization of V*-directed, weakly reversible networks
"""

import dataclasses
import logging
from dataclasses import dataclass, field

import numpy as np
import sympy as sp

from ..algebra import (
    Factored,
    degree_in,
    evaluate,
    from_columns,
    generalized_inverse,
    has_positive_coefficients,
    kernel_basis,
    rank,
    sort_symbols,
    symbol,
    symbols_of,
    to_fraction,
)
from ..errors import AnalysisError, ConditionNotSolvableError, NetworkError
from ..network import default_vstar, is_v_star_directed, redirect, structure_report
from ..utils.config import DEFAULT_CONFIG
from .tree_constants import choose_forest, kappa, tree_constants

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParamComponent:
    """
    x_s = coefficient * prod(base**e for base, e in radicals) * prod(tau_t**tau_exponents[t])
    """

    species: int
    name: str
    coefficient: sp.Expr
    tau_exponents: tuple
    radicals: tuple = ()

    def symbols(self):
        names = set(symbols_of(self.coefficient))
        for base, _ in self.radicals:
            names.update(symbols_of(base))
        return names

    def value(self, values, taus):
        result = float(evaluate(self.coefficient, values))
        for base, e in self.radicals:
            result *= float(evaluate(base, values)) ** float(e)
        for tau, e in zip(taus, self.tau_exponents):
            if e:
                result *= float(tau) ** float(e)
        return result


@dataclass(frozen=True)
class Parametrization:
    species: tuple
    components: tuple
    free_phantoms: tuple
    solved_phantoms: tuple
    tau_count: int
    x_equals_zbar: bool
    kinetic_deficiency: int
    network: object = field(default=None, compare=False)
    forest: object = field(default=None, compare=False)
    tree_constants: object = field(default=None, compare=False)
    kappa: object = field(default=None, compare=False)
    M: sp.Matrix = field(default=None, compare=False)
    H: sp.Matrix = field(default=None, compare=False)
    B: sp.Matrix = field(default=None, compare=False)
    C: sp.Matrix = field(default=None, compare=False)
    substitutions: tuple = field(default=(), compare=False)

    @property
    def tau_symbols(self):
        return tuple(f"tau{t + 1}" for t in range(self.tau_count))

    def solved_dict(self):
        return dict(self.solved_phantoms)

    def rate_symbols(self):
        """Symbols a numeric evaluation needs besides the τ parameters"""
        names = set()
        for component in self.components:
            names.update(component.symbols())
        for _, h in self.solved_phantoms:
            names.update(symbols_of(h))
        names -= {name for name, _ in self.solved_phantoms}
        return tuple(sort_symbols(names))

    def phantom_values(self, values):
        """values extended by the solved phantom parameters"""
        extended = dict(values)
        for name, h in self.solved_phantoms:
            extended[name] = float(evaluate(h, extended))
        return extended

    def evaluate(self, values):
        """
        Concentrations at numeric parameter values

        Args:
            values: rates, free phantoms and tau1.. as floats

        Returns:
            numpy array in species order
        """
        extended = self.phantom_values(values)
        taus = [extended[name] for name in self.tau_symbols]
        return np.array([c.value(extended, taus) for c in self.components])


@dataclass(frozen=True)
class AcrReport:
    """Robust species with their values, in species order"""

    robust: tuple
    values: tuple

    def as_dict(self):
        return dict(zip(self.robust, self.values))


def build_M(net, forest):
    """M: species x forest edges, column ỹ(j) - ỹ(i) for edge (i, j)"""
    if not net.all_kinetic():
        missing = [v.id for v in net.vertices if v.kinetic is None]
        raise NetworkError(f"vertices {missing} have no kinetic complex")
    columns = [(net.vertex(j).kinetic - net.vertex(i).kinetic).vector(net.n_species) for i, j in forest]
    return from_columns(columns, net.n_species)


def theorem_main_verdict(net, vstar):
    """True iff the effective deficiency is zero and net is V*-directed"""
    return structure_report(net).effective_deficiency == 0 and is_v_star_directed(net, vstar)


def _kinetic_deficiency(net, M):
    report = structure_report(net)
    if not report.weakly_reversible:
        raise AnalysisError("network is not weakly reversible; translate or redirect it first")
    return report.m - report.linkage_count - rank(M)


def _vertex_exponents(forest, column):
    """Net exponent of each K_v in prod((K_j / K_i)**column[e])"""
    exponents = {}
    for (i, j), e in zip(forest, column):
        e = to_fraction(e)
        if e:
            exponents[j] = exponents.get(j, 0) + e
            exponents[i] = exponents.get(i, 0) - e
    return exponents


def _assemble(net, forest, K, H, B, *, verdict, kinetic_deficiency, free, solved, extra):
    components = []
    for s, name in enumerate(net.species):
        exponents = _vertex_exponents(forest, H.row(s))
        product = Factored.from_powers((K[v], e) for v, e in sorted(exponents.items()))
        coefficient, radicals = product.split()
        components.append(
            ParamComponent(
                species=s,
                name=name,
                coefficient=coefficient,
                tau_exponents=tuple(to_fraction(e) for e in B.row(s)),
                radicals=radicals,
            )
        )
    return Parametrization(
        species=net.species,
        components=tuple(components),
        free_phantoms=tuple(free),
        solved_phantoms=tuple(solved),
        tau_count=B.cols,
        x_equals_zbar=verdict,
        kinetic_deficiency=kinetic_deficiency,
        network=net,
        forest=forest,
        H=H,
        B=B,
        **extra,
    )


def parametrize_zero(net, forest, K, kappa_vector, *, verdict=False):
    """
    Parametrization for kinetic deficiency zero

    x = κ**(H^T) ∘ τ**(B^T) with H a generalized inverse of M^T and
    B a kernel basis of M^T; every phantom parameter stays free.
    """
    M = build_M(net, forest)
    deficiency = _kinetic_deficiency(net, M)
    if deficiency != 0:
        raise AnalysisError(f"kinetic deficiency is {deficiency}, not zero")
    H = generalized_inverse(M.T)
    B = kernel_basis(M.T)
    return _assemble(
        net, forest, K, H, B,
        verdict=verdict,
        kinetic_deficiency=0,
        free=net.phantom_symbols(),
        solved=(),
        extra={"M": M, "kappa": kappa_vector, "tree_constants": K},
    )


class _SubstitutedConstants:
    """Tree constants after solved phantom parameters are substituted"""

    def __init__(self, K):
        self._values = dict(K.values)

    def __getitem__(self, vertex_id):
        return self._values[vertex_id]

    def substitute(self, name, value):
        self._values = {v: sp.cancel(expr.xreplace({symbol(name): value})) for v, expr in self._values.items()}


def _condition(forest, K, column):
    exponents = _vertex_exponents(forest, column)
    return Factored.from_powers((K[v], e) for v, e in sorted(exponents.items())).to_rational_function()


def parametrize_positive_deficiency(net, forest, K, kappa_vector, *, verdict=False):
    """
    Parametrization for positive kinetic deficiency

    Each condition κ**C[:, c] = 1 is cross-multiplied to N - D = 0 and solved
    for the lowest-ordered free phantom parameter occurring to degree one.

    Raises:
        AnalysisError: not weakly reversible, or fewer phantom parameters
            than conditions
        ConditionNotSolvableError: a condition has no linearly occurring
            free phantom parameter
    """
    M = build_M(net, forest)
    deficiency = _kinetic_deficiency(net, M)
    if deficiency <= 0:
        raise AnalysisError(f"kinetic deficiency is {deficiency}, not positive")
    free = list(net.phantom_symbols())
    if len(free) < deficiency:
        raise AnalysisError(f"{deficiency} conditions but only {len(free)} phantom parameters")
    C = kernel_basis(M)
    constants = _SubstitutedConstants(K)
    solved = []
    for c in range(C.cols):
        condition = _condition(forest, constants, list(C.col(c)))
        num, den = sp.fraction(sp.together(condition))
        difference = sp.expand(num - den)
        candidates = [name for name in free if degree_in(difference, name) == 1]
        if not candidates:
            remaining = [_condition(forest, constants, list(C.col(k))) for k in range(c, C.cols)]
            raise ConditionNotSolvableError(
                "condition cannot be solved explicitly for a phantom parameter",
                conditions=[f"{sp.sstr(r)} = 1" for r in remaining],
                tried=free,
            )
        name = candidates[0]
        linear, constant = sp.Poly(difference, symbol(name)).all_coeffs()
        h = sp.factor(-constant / linear)
        if not has_positive_coefficients(h):
            logger.warning("Solved %s = %s is not manifestly positive", name, h)
        logger.info("Solved %s = %s", name, h)
        solved = [(prior, sp.factor(expr.xreplace({symbol(name): h}))) for prior, expr in solved]
        solved.append((name, h))
        constants.substitute(name, h)
        free.remove(name)

    H = generalized_inverse(M.T)
    B = kernel_basis(M.T)
    return _assemble(
        net, forest, constants, H, B,
        verdict=verdict,
        kinetic_deficiency=deficiency,
        free=free,
        solved=solved,
        extra={"M": M, "C": C, "kappa": kappa_vector, "tree_constants": K},
    )


def detect_acr(p):
    """Species whose value depends on neither τ nor any free phantom parameter"""
    free = set(p.free_phantoms)
    robust, values = [], []
    for component in p.components:
        if any(component.tau_exponents) or component.symbols() & free:
            continue
        robust.append(component.name)
        values.append(component.coefficient)
    return AcrReport(tuple(robust), tuple(values))


def parametrize(net, vstar=None, forest=None, config=None):
    """
    Full pipeline: redirect, verdict, forest, tree constants, κ and the
    parametrization for the network's kinetic deficiency

    Returns:
        Parametrization written in the network's original rate symbols
    """
    if vstar is None:
        vstar = default_vstar(net)
    vstar = frozenset(vstar)
    substitutions = {}
    directed = net
    if not is_v_star_directed(net, vstar):
        directed, substitutions = redirect(net, vstar)
    verdict = theorem_main_verdict(directed, vstar)
    forest = forest or choose_forest(directed)
    K = tree_constants(directed, config or DEFAULT_CONFIG).substitute_all(substitutions)
    kappa_vector = kappa(K, forest)
    M = build_M(directed, forest)
    deficiency = _kinetic_deficiency(directed, M)
    if deficiency == 0:
        result = parametrize_zero(directed, forest, K, kappa_vector, verdict=verdict)
    else:
        result = parametrize_positive_deficiency(directed, forest, K, kappa_vector, verdict=verdict)
    return _with_substitutions(result, substitutions)


def _with_substitutions(p, substitutions):
    if not substitutions:
        return p
    return dataclasses.replace(p, substitutions=tuple(sorted(substitutions.items())))


class ParametrizationAnalyzer:
    """
    Runs the analysis pipeline for the command line and reports results
    """

    def __init__(self, config=None):
        """Initialize the analyzer with configuration"""
        self.config = config or DEFAULT_CONFIG

    def analyze(self, net, vstar=None):
        """
        Structure report, verdict and parametrization of a network

        Args:
            net: Gcrn, usually a translated network
            vstar: representative ids or None for the default choice

        Returns:
            Dict with structure, vstar, parametrization and acr entries
        """
        vstar = frozenset(vstar) if vstar is not None else default_vstar(net)
        parametrization = parametrize(net, vstar, config=self.config)
        return {
            "structure": structure_report(parametrization.network),
            "vstar": tuple(sorted(vstar)),
            "parametrization": parametrization,
            "acr": detect_acr(parametrization),
        }

