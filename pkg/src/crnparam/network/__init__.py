"""
Reaction network model, structural analysis, dynamics and redirection
"""

from .dynamics import OdeExpression, laplacian, laplacian_values, ode_rhs
from .model import Complex, Edge, EdgeKind, Gcrn, RateSymbol, SymbolRole, Vertex
from .redirect import Redirection, default_vstar, is_v_star_directed, redirect, representatives
from .structure import (
    CondensedCrn,
    LinkageStructure,
    StructureReport,
    condense,
    deficiency_by_intersection,
    linkage_structure,
    partition_edges,
    structure_report,
)

__all__ = [
    "Complex",
    "CondensedCrn",
    "Edge",
    "EdgeKind",
    "Gcrn",
    "LinkageStructure",
    "OdeExpression",
    "RateSymbol",
    "Redirection",
    "StructureReport",
    "SymbolRole",
    "Vertex",
    "condense",
    "default_vstar",
    "deficiency_by_intersection",
    "is_v_star_directed",
    "laplacian",
    "laplacian_values",
    "linkage_structure",
    "ode_rhs",
    "partition_edges",
    "redirect",
    "representatives",
    "structure_report",
]
