"""
Numeric verification of parametrizations at seeded random parameter values
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..algebra import evaluate, sort_symbols, to_numpy
from ..network import ode_rhs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SampleResidual:
    index: int
    ode: float
    complex_balance: float
    log_linear: float

    def worst(self):
        return max(self.ode, self.complex_balance, self.log_linear)


@dataclass
class VerifyReport:
    samples: int
    seed: int
    tolerance: float
    residuals: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.worst() <= self.tolerance for r in self.residuals)

    @property
    def failures(self):
        return [r for r in self.residuals if r.worst() > self.tolerance]

    def max_residuals(self):
        if not self.residuals:
            return {"ode": 0.0, "complex_balance": 0.0, "log_linear": 0.0}
        return {
            "ode": max(r.ode for r in self.residuals),
            "complex_balance": max(r.complex_balance for r in self.residuals),
            "log_linear": max(r.log_linear for r in self.residuals),
        }

    def to_dict(self):
        return {
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_residuals": self.max_residuals(),
            "residuals": [
                {
                    "index": r.index,
                    "ode": r.ode,
                    "complex_balance": r.complex_balance,
                    "log_linear": r.log_linear,
                }
                for r in self.residuals
            ],
        }

    def format(self):
        worst = self.max_residuals()
        lines = [
            f"samples: {self.samples} (seed {self.seed})",
            f"max ODE residual: {worst['ode']:.3e}",
            f"max complex-balance residual: {worst['complex_balance']:.3e}",
            f"max log-linear residual: {worst['log_linear']:.3e}",
            f"result: {'pass' if self.passed else 'FAIL'} at tolerance {self.tolerance:g}",
        ]
        return "\n".join(lines)


def _ode_residual(ode, x, values):
    f, scale = ode.evaluate(x, values)
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(f)) / scale) if len(f) else 0.0


def _complex_balance_residual(p, x, values):
    """max |A_k x^Ỹ| relative to the largest edge flux"""
    net = p.network
    rates = dict(values)
    for name, expr in p.substitutions:
        rates[name] = float(evaluate(expr, values))
    log_x = np.log(x)
    flux = {}
    residual = np.zeros(net.n_vertices)
    scale = 0.0
    for edge in net.edges:
        if edge.source not in flux:
            kinetic = np.array([float(c) for c in net.vertex(edge.source).kinetic.vector(net.n_species)])
            flux[edge.source] = float(np.exp(kinetic @ log_x))
        term = float(rates[edge.name]) * flux[edge.source]
        residual[net.vertex_index(edge.source)] -= term
        residual[net.vertex_index(edge.target)] += term
        scale = max(scale, term)
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(residual)) / scale)


def _log_linear_residual(p, x, values):
    """max |M^T ln x - ln κ|"""
    if p.M is None or p.M.cols == 0:
        return 0.0
    lhs = to_numpy(p.M).T @ np.log(x)
    rhs = np.log([float(evaluate(value, values)) for _, value in p.kappa])
    return float(np.max(np.abs(lhs - rhs)))


def sample_symbols(net, parametrization):
    """Symbols drawn per sample: rates, free phantoms and τ, in natural order"""
    names = set(net.effective_symbols())
    names.update(parametrization.rate_symbols())
    names.update(parametrization.free_phantoms)
    names -= {name for name, _ in parametrization.solved_phantoms}
    names -= {name for name, _ in parametrization.substitutions}
    return tuple(sort_symbols(names)) + parametrization.tau_symbols


def sample_points(names, samples, seed=42, low=0.1, high=10.0, fixed=None):
    """
    Log-uniform value dicts for names from one seeded generator

    Values in fixed replace the draws of the first sample only; names that
    are not sampled are ignored.
    """
    rng = np.random.default_rng(seed)
    for index in range(samples):
        draws = np.exp(rng.uniform(np.log(low), np.log(high), size=len(names)))
        values = dict(zip(names, draws.tolist()))
        if index == 0 and fixed:
            values.update({name: float(value) for name, value in fixed.items() if name in values})
        yield values


def numeric_verify(net, parametrization, samples=100, seed=42, tol=1e-8, low=0.1, high=10.0, fixed=None):
    """
    Check a parametrization at log-uniform random points

    Three residuals per sample: the ODE of net at x, complex balance of the
    parametrization's network at x, and M^T ln x = ln κ.

    Args:
        net: network whose ODE is checked; may be the untranslated original
        parametrization: Parametrization produced from a network dynamically
            equivalent to net
        fixed: symbol values for the first sample, e.g. a network file's
            @values line

    Returns:
        VerifyReport; failing samples are logged at warning level
    """
    ode = ode_rhs(net)
    names = sample_symbols(net, parametrization)
    report = VerifyReport(samples=samples, seed=seed, tolerance=tol)
    points = sample_points(names, samples, seed=seed, low=low, high=high, fixed=fixed)
    for index, point in enumerate(points):
        values = parametrization.phantom_values(point)
        x = parametrization.evaluate(values)
        residual = SampleResidual(
            index=index,
            ode=_ode_residual(ode, x, values),
            complex_balance=_complex_balance_residual(parametrization, x, values),
            log_linear=_log_linear_residual(parametrization, x, values),
        )
        if residual.worst() > tol:
            logger.warning("Sample %d exceeds tolerance: %s", index, residual)
        report.residuals.append(residual)
    return report
