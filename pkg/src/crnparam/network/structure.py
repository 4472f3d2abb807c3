"""
Structural analysis: edge partition, linkage classes, condensation and deficiencies
"""

from dataclasses import dataclass

import networkx as nx

from ..algebra import from_columns, rank
from .model import Complex, EdgeKind, Gcrn, RateSymbol, Vertex, Edge


def partition_edges(net):
    """Split edges into (effective, phantom) by comparing stoichiometric complexes"""
    effective = tuple(e for e in net.edges if e.kind is EdgeKind.EFFECTIVE)
    phantom = tuple(e for e in net.edges if e.kind is EdgeKind.PHANTOM)
    return effective, phantom


def _canonical(components):
    return tuple(sorted((tuple(sorted(c)) for c in components), key=lambda c: c[0]))


def _graph(vertex_ids, pairs):
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(vertex_ids)
    graph.add_edges_from(pairs)
    return graph


@dataclass(frozen=True)
class LinkageStructure:
    linkage_classes: tuple
    strong_linkage_classes: tuple
    weakly_reversible: bool

    def __iter__(self):
        return iter((self.linkage_classes, self.strong_linkage_classes, self.weakly_reversible))

    def class_of(self, vertex_id):
        return next(c for c in self.linkage_classes if vertex_id in c)


def linkage_structure(net):
    """
    Linkage classes, strong linkage classes and weak reversibility

    Returns:
        LinkageStructure, which also unpacks as a 3-tuple
    """
    graph = _graph(net.vertex_ids, [(e.source, e.target) for e in net.edges])
    linkage = _canonical(nx.weakly_connected_components(graph))
    strong = _canonical(nx.strongly_connected_components(graph))
    return LinkageStructure(linkage, strong, set(linkage) == set(strong))


@dataclass(frozen=True)
class CondensedCrn:
    """
    Network on classes of vertices sharing a stoichiometric complex

    classes are sorted vertex-id tuples ordered by their lowest id; edges are
    deduplicated (source class index, target class index) pairs.
    """

    species: tuple
    classes: tuple
    complexes: tuple
    edges: tuple

    def class_of(self, vertex_id):
        for index, members in enumerate(self.classes):
            if vertex_id in members:
                return index
        raise KeyError(vertex_id)

    @property
    def n_linkage_classes(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.classes)))
        graph.add_edges_from(self.edges)
        return nx.number_connected_components(graph)

    def to_gcrn(self):
        """Classical network with one vertex per class, ids starting at 1"""
        vertices = [Vertex(k + 1, c, c) for k, c in enumerate(self.complexes)]
        edges = [Edge(a + 1, b + 1, RateSymbol(f"c{a + 1}_{b + 1}")) for a, b in self.edges]
        return Gcrn(self.species, vertices, edges)

    def format(self):
        lines = []
        for k, (members, complex_) in enumerate(zip(self.classes, self.complexes)):
            ids = ", ".join(str(v) for v in members)
            lines.append(f"[{k + 1}] {{{ids}}}: {complex_.format(self.species)}")
        for a, b in self.edges:
            lines.append(f"[{a + 1}] -> [{b + 1}]")
        return "\n".join(lines)


def condense(net):
    groups = {}
    for vertex in net.vertices:
        groups.setdefault(vertex.stoich, []).append(vertex.id)
    classes = sorted((tuple(sorted(ids)) for ids in groups.values()), key=lambda c: c[0])
    complexes = tuple(net.vertex(c[0]).stoich for c in classes)
    index = {v: k for k, members in enumerate(classes) for v in members}
    edges = sorted({(index[e.source], index[e.target]) for e in net.edges if e.kind is EdgeKind.EFFECTIVE})
    return CondensedCrn(net.species, tuple(classes), complexes, tuple(edges))


def _reaction_vectors(net, kinetic=False):
    columns = []
    for edge in net.edges:
        a, b = net.vertex(edge.source), net.vertex(edge.target)
        if kinetic:
            diff = b.kinetic - a.kinetic
        else:
            diff = b.stoich - a.stoich
        columns.append(diff.vector(net.n_species))
    return from_columns(columns, net.n_species)


def stoichiometric_rank(net):
    """s = rank(Y I_E)"""
    return rank(_reaction_vectors(net))


def kinetic_rank(net):
    """s̃ = rank(Ỹ I_E), or None unless every vertex is a source with a kinetic complex"""
    if not net.all_kinetic() or net.source_ids() != frozenset(net.vertex_ids):
        return None
    return rank(_reaction_vectors(net, kinetic=True))


def deficiency_by_intersection(net, kinetic=False):
    """dim(ker Y ∩ im I_E) = rank(I_E) - rank(Y I_E)"""
    incidence = rank(net.incidence_matrix())
    if kinetic:
        s = kinetic_rank(net)
        return None if s is None else incidence - s
    return incidence - stoichiometric_rank(net)


@dataclass(frozen=True)
class StructureReport:
    m: int
    linkage_count: int
    s: int
    s_kinetic: int
    deficiency: int
    kinetic_deficiency: int
    effective_deficiency: int
    m_condensed: int
    linkage_count_condensed: int
    weakly_reversible: bool
    linkage_classes: tuple
    strong_linkage_classes: tuple

    def to_dict(self):
        return {
            "vertices": self.m,
            "linkage_classes": [list(c) for c in self.linkage_classes],
            "strong_linkage_classes": [list(c) for c in self.strong_linkage_classes],
            "linkage_class_count": self.linkage_count,
            "stoichiometric_dimension": self.s,
            "kinetic_dimension": self.s_kinetic,
            "deficiency": self.deficiency,
            "kinetic_deficiency": self.kinetic_deficiency,
            "effective_deficiency": self.effective_deficiency,
            "condensed_vertices": self.m_condensed,
            "condensed_linkage_class_count": self.linkage_count_condensed,
            "weakly_reversible": self.weakly_reversible,
        }

    def format(self):
        def show(value):
            return "n/a" if value is None else str(value)

        lines = [
            f"vertices (m): {self.m}",
            f"linkage classes (l): {self.linkage_count}",
            f"stoichiometric dimension (s): {self.s}",
            f"kinetic dimension (s~): {show(self.s_kinetic)}",
            f"deficiency: {self.deficiency}",
            f"kinetic deficiency: {show(self.kinetic_deficiency)}",
            f"effective deficiency: {self.effective_deficiency}",
            f"weakly reversible: {'yes' if self.weakly_reversible else 'no'}",
            "linkage classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in self.linkage_classes),
            "strong linkage classes: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in self.strong_linkage_classes),
        ]
        return "\n".join(lines)


def structure_report(net):
    linkage, strong, reversible = linkage_structure(net)
    m, ell = net.n_vertices, len(linkage)
    s = stoichiometric_rank(net)
    s_kinetic = kinetic_rank(net)
    condensed = condense(net)
    m_c, ell_c = len(condensed.classes), condensed.n_linkage_classes
    return StructureReport(
        m=m,
        linkage_count=ell,
        s=s,
        s_kinetic=s_kinetic,
        deficiency=m - ell - s,
        kinetic_deficiency=None if s_kinetic is None else m - ell - s_kinetic,
        effective_deficiency=m_c - ell_c - s,
        m_condensed=m_c,
        linkage_count_condensed=ell_c,
        weakly_reversible=reversible,
        linkage_classes=linkage,
        strong_linkage_classes=strong,
    )
