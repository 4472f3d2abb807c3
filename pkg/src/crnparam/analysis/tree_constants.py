"""
Tree constants of strongly connected linkage classes and the κ vector

K_i sums, over spanning trees of its linkage class directed towards i, the
product of edge labels. Two routes compute it: signed principal minors of
the class Laplacian (matrix-tree theorem) and explicit enumeration, which
serves as an oracle on small classes.
"""

import logging
from dataclasses import dataclass

import sympy as sp

from ..algebra import determinant, has_positive_coefficients, symbol
from ..errors import AnalysisError
from ..network import linkage_structure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanningForest:
    """Ordered vertex pairs, one tree per linkage class"""

    edges: tuple

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class TreeConstants:
    """Per-vertex polynomial in rate symbols, stored as sorted (vertex id, expression) pairs"""

    values: tuple

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(sorted(mapping.items())))

    def __getitem__(self, vertex_id):
        for v, poly in self.values:
            if v == vertex_id:
                return poly
        raise KeyError(vertex_id)

    def as_dict(self):
        return dict(self.values)

    def substitute_all(self, mapping):
        replacements = {symbol(name): value for name, value in mapping.items()}
        return TreeConstants(tuple((v, sp.expand(poly.xreplace(replacements))) for v, poly in self.values))


@dataclass(frozen=True)
class KappaVector:
    """Per-forest-edge quotient K_j / K_i as ((i, j), sympy expression) pairs"""

    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index][1]


def _strong_classes(net):
    structure = linkage_structure(net)
    strong = set(structure.strong_linkage_classes)
    for members in structure.linkage_classes:
        if members not in strong:
            raise AnalysisError(
                f"linkage class {{{', '.join(map(str, members))}}} is not strongly connected; "
                "its tree constants would vanish"
            )
    return structure.linkage_classes


def _out_weights(net, members):
    """{source: {target: summed label}} restricted to one class"""
    inside = set(members)
    weights = {v: {} for v in members}
    for edge in net.edges:
        if edge.source in inside:
            row = weights[edge.source]
            row[edge.target] = row.get(edge.target, sp.Integer(0)) + symbol(edge.name)
    return weights


def _closes_cycle(vertex, parent):
    current = parent[vertex]
    while current in parent:
        if current == vertex:
            return True
        current = parent[current]
    return False


def _tree_sum(root, members, weights):
    order = [v for v in members if v != root]
    parent = {}
    products = []

    def extend(index, product):
        if index == len(order):
            products.append(product)
            return
        vertex = order[index]
        for target, weight in weights[vertex].items():
            parent[vertex] = target
            if not _closes_cycle(vertex, parent):
                extend(index + 1, product * weight)
            del parent[vertex]

    extend(0, sp.Integer(1))
    return sp.expand(sp.Add(*products))


def tree_constants_enumerate(net, limit=6):
    """
    Tree constants by enumerating every in-tree of each class

    Each non-root vertex chooses one outgoing edge inside its class; choices
    closing a cycle are pruned, so the completed choices are exactly the
    spanning trees directed towards the root.

    Raises:
        AnalysisError: a class is not strongly connected or exceeds limit
    """
    values = {}
    for members in _strong_classes(net):
        if len(members) > limit:
            raise AnalysisError(f"class of {len(members)} vertices exceeds the enumeration limit {limit}")
        weights = _out_weights(net, members)
        for root in members:
            values[root] = _tree_sum(root, members, weights)
    return TreeConstants.from_dict(values)


def class_laplacian(net, members):
    """Laplacian of one class as a sympy Matrix, in members order"""
    position = {v: k for k, v in enumerate(members)}
    size = len(members)
    matrix = sp.zeros(size, size)
    for source, row in _out_weights(net, members).items():
        i = position[source]
        for target, weight in row.items():
            j = position[target]
            matrix[j, i] += weight
            matrix[i, i] -= weight
    return matrix


def tree_constants_cofactor(net, determinant_method="auto", laplace_limit=9):
    """
    Tree constants as signed principal minors of each class Laplacian

    K_i = (-1)**(size - 1) * det(L with row i and column i removed)

    Args:
        determinant_method: "auto", "bareiss" or "laplace"; "auto" expands by
            minors for classes up to laplace_limit vertices
    """
    values = {}
    for members in _strong_classes(net):
        size = len(members)
        method = determinant_method
        if method == "auto":
            method = "laplace" if size <= laplace_limit else "bareiss"
        matrix = class_laplacian(net, members)
        sign = -1 if (size - 1) % 2 else 1
        for k, root in enumerate(members):
            kept = [r for r in range(size) if r != k]
            value = sp.expand(sign * determinant(matrix.extract(kept, kept), method))
            if not has_positive_coefficients(value):
                raise AnalysisError(f"tree constant of vertex {root} is not a positive polynomial: {value}")
            values[root] = value
        logger.debug("Computed tree constants for class %s with %s", members, method)
    return TreeConstants.from_dict(values)


def tree_constants(net, config=None):
    """Dispatch to the cofactor or enumeration route following the config"""
    settings = (config or {}).get("tree_constants", {})
    if settings.get("method", "cofactor") == "enumerate":
        return tree_constants_enumerate(net, limit=settings.get("enumeration_limit", 6))
    return tree_constants_cofactor(
        net,
        determinant_method=settings.get("determinant", "auto"),
        laplace_limit=settings.get("laplace_limit", 9),
    )


def choose_forest(net):
    """Star forest: the lowest id of each linkage class joined to every other member"""
    edges = []
    for members in linkage_structure(net).linkage_classes:
        root = members[0]
        edges.extend((root, j) for j in members[1:])
    return SpanningForest(tuple(edges))


def kappa(K, forest):
    """κ for forest edge (i, j) is K_j / K_i"""
    return KappaVector(tuple(((i, j), sp.cancel(K[j] / K[i])) for i, j in forest))
