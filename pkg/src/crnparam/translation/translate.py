"""
Network translation: adding a complex to both sides of each reaction
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple

from ..algebra import symbol
from ..errors import NetworkError, SchemeError
from ..network import Complex, Edge, Gcrn, RateSymbol, SymbolRole, Vertex, condense, default_vstar, ode_rhs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TranslationScheme:
    """
    Args:
        added: one Complex per reaction, in reaction order
        attachments: (a, b) pairs attaching the target of reaction a to the
            source vertex of reaction b (1-based reaction numbers)
        phantoms: (source id, target id) phantom edge requests
    """

    added: tuple
    attachments: tuple = ()
    phantoms: tuple = ()

    @classmethod
    def identity(cls, reaction_count):
        return cls(tuple(Complex.zero() for _ in range(reaction_count)))


class Translation(NamedTuple):
    network: Gcrn
    edge_map: tuple


def _phantom_names(count, taken):
    if count == 1 and "phi" not in taken:
        return ["phi"]
    names, k = [], 1
    while len(names) < count:
        if f"phi{k}" not in taken:
            names.append(f"phi{k}")
        k += 1
    return names


def translate(crn, scheme, auto_phantom=False):
    """
    Translate a classical network

    Source vertices are created first in reaction order; each target then
    attaches to the vertex with the same (stoichiometric, kinetic) pair, else
    to the lowest-id vertex with the same stoichiometric complex, else to a
    new vertex without a kinetic complex.

    Returns:
        Translation(network, edge_map) with edge_map[r] the index of the
        translated edge of reaction r + 1

    Raises:
        SchemeError: non-classical input or a scheme that does not fit crn
    """
    if not crn.is_classical():
        raise SchemeError("translation needs a classical network")
    reactions = crn.edges
    if len(scheme.added) != len(reactions):
        missing = list(range(len(scheme.added) + 1, len(reactions) + 1))
        raise SchemeError(
            f"scheme covers {len(scheme.added)} of {len(reactions)} reactions"
            + (f"; missing r{', r'.join(map(str, missing))}" if missing else "")
        )

    vertices = {}
    by_pair = {}

    def add_vertex(stoich, kinetic):
        vertex_id = len(vertices) + 1
        vertices[vertex_id] = Vertex(vertex_id, stoich, kinetic)
        by_pair[(stoich, kinetic)] = vertex_id
        return vertex_id

    sources = []
    for edge, added in zip(reactions, scheme.added):
        y = crn.vertex(edge.source).stoich
        pair = (y + added, y)
        sources.append(by_pair[pair] if pair in by_pair else add_vertex(*pair))

    attached = {}
    for a, b in scheme.attachments:
        if not (1 <= a <= len(reactions) and 1 <= b <= len(reactions)):
            raise SchemeError(f"attachment r{a} -> r{b} references an unknown reaction")
        attached[a - 1] = sources[b - 1]

    targets = []
    for r, (edge, added) in enumerate(zip(reactions, scheme.added)):
        y = crn.vertex(edge.target).stoich
        stoich = y + added
        if r in attached:
            target = attached[r]
            if vertices[target].stoich != stoich:
                raise SchemeError(f"reaction r{r + 1} cannot attach to vertex {target}: complexes differ")
        elif (stoich, y) in by_pair:
            target = by_pair[(stoich, y)]
        else:
            same = [v for v, vertex in vertices.items() if vertex.stoich == stoich]
            target = same[0] if same else add_vertex(stoich, None)
        targets.append(target)

    edges = [Edge(s, t, edge.label) for s, t, edge in zip(sources, targets, reactions)]

    taken = {e.name for e in reactions}
    requests = list(scheme.phantoms)
    for a, b in requests:
        if a not in vertices or b not in vertices:
            raise SchemeError(f"phantom request v{a} -> v{b} references an unknown vertex")
        if vertices[a].stoich != vertices[b].stoich:
            raise SchemeError(f"phantom request v{a} -> v{b} joins unequal stoichiometric complexes")
    edges += [
        Edge(a, b, RateSymbol(name, SymbolRole.PHANTOM_PARAMETER))
        for (a, b), name in zip(requests, _phantom_names(len(requests), taken))
    ]

    try:
        network = Gcrn(crn.species, vertices.values(), edges)
        if auto_phantom:
            network = _add_phantoms(network)
    except NetworkError as e:
        raise SchemeError(f"translated network is invalid: {e.message}") from e
    logger.info("Translated %d reactions onto %d vertices", len(reactions), len(vertices))
    return Translation(network, tuple(range(len(reactions))))


def _add_phantoms(net):
    vstar = default_vstar(net)
    present = {(e.source, e.target) for e in net.edges}
    missing = []
    for members in condense(net).classes:
        rep = next(v for v in members if v in vstar)
        missing.extend((rep, j) for j in members if j != rep and (rep, j) not in present)
    if not missing:
        return net
    taken = set(net.symbol_names())
    names = [f"phi{k}" for k in range(1, len(missing) + len(taken) + 2) if f"phi{k}" not in taken][: len(missing)]
    added = [Edge(a, b, RateSymbol(name, SymbolRole.PHANTOM_PARAMETER)) for (a, b), name in zip(missing, names)]
    for edge in added:
        logger.info("Adding phantom edge %d->%d (%s)", edge.source, edge.target, edge.name)
    return net.with_edges(net.edges + tuple(added))


@dataclass(frozen=True)
class TranslationCertificate:
    edge_map: tuple
    reaction_vectors: tuple
    kinetic_complexes: tuple
    ode_difference: object

    @property
    def reaction_vectors_preserved(self):
        return all(self.reaction_vectors)

    @property
    def kinetic_complexes_match(self):
        return all(self.kinetic_complexes)

    @property
    def valid(self):
        return self.reaction_vectors_preserved and self.kinetic_complexes_match and self.ode_difference.is_zero()

    def failures(self):
        messages = []
        for r, (vectors, kinetic) in enumerate(zip(self.reaction_vectors, self.kinetic_complexes)):
            if not vectors:
                messages.append(f"r{r + 1}: reaction vector changed")
            if not kinetic:
                messages.append(f"r{r + 1}: kinetic complex differs from the source complex")
        if not self.ode_difference.is_zero():
            messages.append("ODE right-hand sides differ")
        return messages

    def to_dict(self):
        return {
            "valid": self.valid,
            "edge_map": {f"r{r + 1}": e for r, e in enumerate(self.edge_map)},
            "reaction_vectors_preserved": self.reaction_vectors_preserved,
            "kinetic_complexes_match": self.kinetic_complexes_match,
            "ode_difference_zero": self.ode_difference.is_zero(),
            "failures": self.failures(),
        }


def certify(crn, translated, edge_map):
    """
    Check both translation conditions edge by edge and compare the ODEs exactly

    Translated rate symbols are renamed to their source reaction's symbol
    before the right-hand sides are compared.
    """
    vectors, kinetic = [], []
    renaming = {}
    for original, index in zip(crn.edges, edge_map):
        edge = translated.edges[index]
        source, target = translated.vertex(edge.source), translated.vertex(edge.target)
        y_i, y_j = crn.vertex(original.source).stoich, crn.vertex(original.target).stoich
        vectors.append(target.stoich - source.stoich == y_j - y_i)
        kinetic.append(source.kinetic == y_i)
        if edge.name != original.name:
            renaming[edge.name] = symbol(original.name)
    difference = ode_rhs(translated).substitute(renaming) - ode_rhs(crn)
    return TranslationCertificate(tuple(edge_map), tuple(vectors), tuple(kinetic), difference)
