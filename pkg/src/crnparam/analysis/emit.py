"""
Text, JSON and LaTeX renderings of parametrizations
"""

import json
import re
from fractions import Fraction

import sympy as sp

from ..algebra import evaluate, exact, from_text, symbol, symbols_of, to_lists, to_text
from .parametrization import detect_acr

FORMATS = ("text", "json", "latex")

_GREEK = {"phi": r"\varphi", "tau": r"\tau", "kappa": r"\kappa"}
_SYMBOL = re.compile(r"^([A-Za-z_]+?)_?(\d+)$")


def latex_symbol(name):
    """k12 -> k_{12}, phi1 -> \\varphi_{1}, k3+k7 -> (k_{3}+k_{7})"""
    if "+" in name:
        return "(" + "+".join(latex_symbol(part) for part in name.split("+")) + ")"
    if name in _GREEK:
        return _GREEK[name]
    match = _SYMBOL.match(name)
    if match:
        stem, index = match.groups()
        return f"{_GREEK.get(stem, stem)}_{{{index}}}"
    if len(name) > 1:
        return rf"\mathit{{{name}}}"
    return name


def _fraction_text(value):
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else str(value)


def component_expression(component, tau_symbols):
    """coefficient * radicals * τ powers as one sympy expression"""
    value = component.coefficient
    for base, e in component.radicals:
        value *= base ** exact(e)
    for tau, e in zip(tau_symbols, component.tau_exponents):
        if e:
            value *= symbol(tau) ** exact(e)
    return value


def latex_expression(expr):
    names = {symbol(name): latex_symbol(name) for name in symbols_of(expr)}
    return sp.latex(expr, symbol_names=names)


def _rf_document(expr):
    num, den = sp.fraction(sp.together(expr))
    return {"numerator": to_text(num), "denominator": to_text(den), "text": to_text(expr)}


def rf_from_document(document):
    return from_text(document["numerator"]) / from_text(document["denominator"])


def to_document(p, include_construction=True):
    """JSON-ready dict; keys are emitted sorted for byte-stable output"""
    tau_symbols = p.tau_symbols
    acr = detect_acr(p)
    document = {
        "species": list(p.species),
        "x_equals_zbar": p.x_equals_zbar,
        "kinetic_deficiency": p.kinetic_deficiency,
        "tau_count": p.tau_count,
        "free_phantoms": list(p.free_phantoms),
        "solved_phantoms": {name: _rf_document(h) for name, h in p.solved_phantoms},
        "components": [
            {
                "species": c.name,
                "coefficient": _rf_document(c.coefficient),
                "radicals": [{"base": to_text(base), "exponent": _fraction_text(e)} for base, e in c.radicals],
                "tau_exponents": [_fraction_text(e) for e in c.tau_exponents],
                "expression": to_text(component_expression(c, tau_symbols)),
            }
            for c in p.components
        ],
        "acr": {"robust": list(acr.robust), "values": {name: to_text(v) for name, v in zip(acr.robust, acr.values)}},
    }
    if include_construction and p.M is not None:
        document["forest"] = [list(edge) for edge in p.forest]
        document["tree_constants"] = {str(v): to_text(poly) for v, poly in p.tree_constants.values}
        document["kappa"] = [{"edge": list(edge), "value": to_text(value)} for edge, value in p.kappa]
        document["matrices"] = {
            name: to_lists(matrix)
            for name, matrix in (("M", p.M), ("H", p.H), ("B", p.B), ("C", p.C))
            if matrix is not None
        }
        document["substitutions"] = {name: to_text(expr) for name, expr in p.substitutions}
    return document


def evaluate_document(document, values):
    """
    Concentrations from a JSON document, independent of the Parametrization object

    Args:
        document: output of to_document
        values: rates, free phantoms and tau1.. as floats
    """
    extended = dict(values)
    for name, h in document["solved_phantoms"].items():
        extended[name] = float(evaluate(rf_from_document(h), extended))
    taus = [extended[f"tau{t + 1}"] for t in range(document["tau_count"])]
    result = []
    for component in document["components"]:
        value = float(evaluate(rf_from_document(component["coefficient"]), extended))
        for radical in component["radicals"]:
            base = from_text(radical["base"])
            value *= float(evaluate(base, extended)) ** float(Fraction(radical["exponent"]))
        for tau, e in zip(taus, component["tau_exponents"]):
            value *= tau ** float(Fraction(e))
        result.append(value)
    return result


def emit_text(p):
    tau_symbols = p.tau_symbols
    lines = [f"{c.name} = {to_text(component_expression(c, tau_symbols))}" for c in p.components]
    for name, h in p.solved_phantoms:
        lines.append(f"{name} = {to_text(h)}")
    if p.free_phantoms:
        lines.append("free phantom parameters: " + ", ".join(p.free_phantoms))
    lines.append(f"tau parameters: {p.tau_count}")
    lines.append(f"kinetic deficiency: {p.kinetic_deficiency}")
    lines.append(f"equilibria equal complex-balanced set: {'yes' if p.x_equals_zbar else 'not guaranteed'}")
    acr = detect_acr(p)
    lines.append("absolute concentration robustness: " + (", ".join(acr.robust) or "none"))
    return "\n".join(lines)


def emit_latex(p):
    tau_symbols = p.tau_symbols
    rows = [f"{latex_symbol(c.name)} &= {latex_expression(component_expression(c, tau_symbols))}" for c in p.components]
    for name, h in p.solved_phantoms:
        rows.append(f"{latex_symbol(name)} &= {latex_expression(h)}")
    if not rows:
        return "\\begin{aligned}\n\\end{aligned}"
    return "\\begin{aligned}\n" + " \\\\\n".join(rows) + "\n\\end{aligned}"


def emit(p, fmt="text", indent=2):
    """
    Render a parametrization

    Args:
        fmt: "text", "json" or "latex"
    """
    if fmt == "json":
        return json.dumps(to_document(p), indent=indent, sort_keys=True)
    if fmt == "latex":
        return emit_latex(p)
    if fmt == "text":
        return emit_text(p)
    raise ValueError(f"unknown format {fmt!r}")
