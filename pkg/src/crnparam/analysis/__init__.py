"""
Tree constants, equilibrium parametrization, report emitters and numeric verification
"""

from .emit import emit, evaluate_document, to_document
from .parametrization import (
    AcrReport,
    ParamComponent,
    Parametrization,
    ParametrizationAnalyzer,
    build_M,
    detect_acr,
    parametrize,
    parametrize_positive_deficiency,
    parametrize_zero,
    theorem_main_verdict,
)
from .tree_constants import (
    KappaVector,
    SpanningForest,
    TreeConstants,
    choose_forest,
    kappa,
    tree_constants,
    tree_constants_cofactor,
    tree_constants_enumerate,
)
from .verify import VerifyReport, numeric_verify, sample_points

__all__ = [
    "AcrReport",
    "KappaVector",
    "ParamComponent",
    "Parametrization",
    "ParametrizationAnalyzer",
    "SpanningForest",
    "TreeConstants",
    "VerifyReport",
    "build_M",
    "choose_forest",
    "detect_acr",
    "emit",
    "evaluate_document",
    "kappa",
    "numeric_verify",
    "sample_points",
    "parametrize",
    "parametrize_positive_deficiency",
    "parametrize_zero",
    "theorem_main_verdict",
    "to_document",
    "tree_constants",
    "tree_constants_cofactor",
    "tree_constants_enumerate",
]
