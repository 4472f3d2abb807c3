"""
Typed graph model of classical and generalized mass-action networks
"""

import dataclasses
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..algebra import from_columns, rational_matrix, symbol_key
from ..errors import NetworkError


class SymbolRole(Enum):
    RATE_CONSTANT = "rate_constant"
    PHANTOM_PARAMETER = "phantom_parameter"
    TAU_PARAMETER = "tau_parameter"


class EdgeKind(Enum):
    EFFECTIVE = "effective"
    PHANTOM = "phantom"


@dataclass(frozen=True)
class Complex:
    """Sparse species combination: sorted (species index, coefficient) pairs"""

    coefficients: tuple = ()

    @classmethod
    def from_mapping(cls, mapping):
        items = sorted((int(i), Fraction(c)) for i, c in mapping.items())
        return cls(tuple((i, c) for i, c in items if c))

    @classmethod
    def zero(cls):
        return cls()

    def as_dict(self):
        return dict(self.coefficients)

    def get(self, index):
        return self.as_dict().get(index, Fraction(0))

    def is_zero(self):
        return not self.coefficients

    def __add__(self, other):
        merged = self.as_dict()
        for i, c in other.coefficients:
            merged[i] = merged.get(i, 0) + c
        return Complex.from_mapping(merged)

    def __sub__(self, other):
        merged = self.as_dict()
        for i, c in other.coefficients:
            merged[i] = merged.get(i, 0) - c
        return Complex.from_mapping(merged)

    def vector(self, n_species):
        values = [Fraction(0)] * n_species
        for i, c in self.coefficients:
            values[i] = c
        return tuple(values)

    def format(self, species):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in self.coefficients:
            parts.append(species[i] if c == 1 else f"{c}*{species[i]}")
        return " + ".join(parts)


@dataclass(frozen=True)
class RateSymbol:
    name: str
    role: SymbolRole = SymbolRole.RATE_CONSTANT


@dataclass(frozen=True)
class Vertex:
    id: int
    stoich: Complex
    kinetic: Complex = None


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    label: RateSymbol
    kind: EdgeKind = EdgeKind.EFFECTIVE

    @property
    def name(self):
        return self.label.name


class Gcrn:
    """
    Generalized chemical reaction network

    Args:
        species: ordered species names
        vertices: Vertex objects with unique ids
        edges: Edge objects; their kind is recomputed from the stoichiometric
            complexes of the endpoints

    Raises:
        NetworkError: on any violated structural invariant
    """

    def __init__(self, species, vertices, edges):
        self.species = tuple(species)
        if len(set(self.species)) != len(self.species):
            raise NetworkError("duplicate species name")
        self.vertices = tuple(sorted(vertices, key=lambda v: v.id))
        self._by_id = {}
        for vertex in self.vertices:
            if vertex.id in self._by_id:
                raise NetworkError(f"duplicate vertex id {vertex.id}")
            for complex_ in (vertex.stoich, vertex.kinetic):
                if complex_ is not None and any(i < 0 or i >= len(self.species) for i, _ in complex_.coefficients):
                    raise NetworkError(f"vertex {vertex.id} references an unknown species")
            self._by_id[vertex.id] = vertex
        self._index = {vertex.id: k for k, vertex in enumerate(self.vertices)}

        checked = []
        names = set()
        for edge in edges:
            if edge.source not in self._by_id or edge.target not in self._by_id:
                raise NetworkError(f"edge {edge.source}->{edge.target} references an unknown vertex")
            if edge.source == edge.target:
                raise NetworkError(f"self-loop at vertex {edge.source}")
            if edge.label.name in names:
                raise NetworkError(f"duplicate rate symbol {edge.label.name}")
            names.add(edge.label.name)
            source = self._by_id[edge.source]
            if source.kinetic is None:
                raise NetworkError(f"source vertex {edge.source} has no kinetic complex")
            phantom = source.stoich == self._by_id[edge.target].stoich
            if edge.label.role is SymbolRole.PHANTOM_PARAMETER and not phantom:
                raise NetworkError(f"phantom label {edge.label.name} on effective edge {edge.source}->{edge.target}")
            if edge.label.role is SymbolRole.TAU_PARAMETER:
                raise NetworkError(f"tau symbol {edge.label.name} cannot label an edge")
            kind = EdgeKind.PHANTOM if phantom else EdgeKind.EFFECTIVE
            checked.append(dataclasses.replace(edge, kind=kind))
        self.edges = tuple(checked)

    # -- lookup --------------------------------------------------------

    def vertex(self, vertex_id):
        try:
            return self._by_id[vertex_id]
        except KeyError:
            raise NetworkError(f"unknown vertex {vertex_id}") from None

    def vertex_index(self, vertex_id):
        return self._index[vertex_id]

    @property
    def vertex_ids(self):
        return tuple(v.id for v in self.vertices)

    @property
    def n_species(self):
        return len(self.species)

    @property
    def n_vertices(self):
        return len(self.vertices)

    def source_ids(self):
        return frozenset(edge.source for edge in self.edges)

    def all_kinetic(self):
        """True when every vertex carries a kinetic complex"""
        return all(v.kinetic is not None for v in self.vertices)

    def is_classical(self):
        stoich = [v.stoich for v in self.vertices]
        if len(set(stoich)) != len(stoich):
            return False
        return all(self._by_id[s].kinetic == self._by_id[s].stoich for s in self.source_ids())

    def symbols(self):
        return tuple(edge.label for edge in self.edges)

    def symbol_names(self):
        return tuple(edge.name for edge in self.edges)

    def phantom_symbols(self):
        """Labels of phantom edges in natural order; these are free parameters"""
        names = {edge.name for edge in self.edges if edge.kind is EdgeKind.PHANTOM}
        return tuple(sorted(names, key=symbol_key))

    def effective_symbols(self):
        return tuple(edge.name for edge in self.edges if edge.kind is EdgeKind.EFFECTIVE)

    def with_edges(self, edges):
        return Gcrn(self.species, self.vertices, edges)

    # -- matrices ------------------------------------------------------

    def stoichiometric_matrix(self):
        """Y: species x vertices"""
        return from_columns([v.stoich.vector(self.n_species) for v in self.vertices], self.n_species)

    def kinetic_matrix(self):
        """Ỹ: species x vertices; needs a kinetic complex on every vertex"""
        if not self.all_kinetic():
            missing = [v.id for v in self.vertices if v.kinetic is None]
            raise NetworkError(f"vertices {missing} have no kinetic complex")
        return from_columns([v.kinetic.vector(self.n_species) for v in self.vertices], self.n_species)

    def incidence_matrix(self):
        """I_E: vertices x edges, -1 at the source and +1 at the target"""
        rows = [[0] * len(self.edges) for _ in self.vertices]
        for e, edge in enumerate(self.edges):
            rows[self._index[edge.source]][e] -= 1
            rows[self._index[edge.target]][e] += 1
        return rational_matrix(rows, len(self.edges))

    def source_matrix(self):
        """I_E^s: vertices x edges, +1 at the source"""
        rows = [[0] * len(self.edges) for _ in self.vertices]
        for e, edge in enumerate(self.edges):
            rows[self._index[edge.source]][e] = 1
        return rational_matrix(rows, len(self.edges))

    # -- comparison ----------------------------------------------------

    def _edge_key(self):
        return sorted((e.source, e.target, e.label.name, e.label.role.value) for e in self.edges)

    def __eq__(self, other):
        if not isinstance(other, Gcrn):
            return NotImplemented
        return (
            self.species == other.species
            and self.vertices == other.vertices
            and self._edge_key() == other._edge_key()
        )

    __hash__ = None

    def __repr__(self):
        return f"Gcrn(species={len(self.species)}, vertices={len(self.vertices)}, edges={len(self.edges)})"
