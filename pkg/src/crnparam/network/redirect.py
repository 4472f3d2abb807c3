"""
Representative sets and redirection to V*-directed networks
"""

import logging
from typing import NamedTuple

import sympy as sp

from ..algebra import sort_symbols, symbol
from ..errors import SectionError
from .model import Edge, EdgeKind, RateSymbol, SymbolRole
from .structure import condense

logger = logging.getLogger(__name__)


def representatives(net, vstar, condensed=None):
    """
    Map each condensed class index to its representative vertex

    Raises:
        SectionError: vstar does not pick exactly one vertex per class
    """
    condensed = condensed or condense(net)
    vstar = set(vstar)
    unknown = vstar - set(net.vertex_ids)
    if unknown:
        raise SectionError(f"representatives {sorted(unknown)} are not vertices")
    chosen = {}
    for index, members in enumerate(condensed.classes):
        picked = [v for v in members if v in vstar]
        if len(picked) != 1:
            raise SectionError(
                f"class {{{', '.join(map(str, members))}}} needs exactly one representative, got {len(picked)}"
            )
        chosen[index] = picked[0]
    return chosen


def is_v_star_directed(net, vstar):
    condensed = condense(net)
    rho = representatives(net, vstar, condensed)
    reps = set(rho.values())
    if any(e.target not in reps for e in net.edges if e.kind is EdgeKind.EFFECTIVE):
        return False
    required = {
        (rho[index], j)
        for index, members in enumerate(condensed.classes)
        for j in members
        if j != rho[index]
    }
    present = {(e.source, e.target) for e in net.edges if e.kind is EdgeKind.PHANTOM}
    return present == required


def default_vstar(net):
    """
    Deterministic representative per condensed class

    In order of preference: the lowest-id vertex receiving every effective
    edge that enters the class; the vertex whose phantom edges reach every
    other member; the lowest-id vertex carrying a kinetic complex; the lowest id.
    """
    condensed = condense(net)
    chosen = []
    for index, members in enumerate(condensed.classes):
        if len(members) == 1:
            chosen.append(members[0])
            continue
        entering = {e.target for e in net.edges if e.kind is EdgeKind.EFFECTIVE and e.target in members}
        phantom_targets = {}
        for e in net.edges:
            if e.kind is EdgeKind.PHANTOM and e.source in members:
                phantom_targets.setdefault(e.source, set()).add(e.target)
        if len(entering) == 1:
            rep, rule = next(iter(entering)), "entering edges"
        else:
            fans = [v for v in members if phantom_targets.get(v, set()) >= set(members) - {v}]
            if fans:
                rep, rule = fans[0], "phantom fan-out"
            else:
                kinetic = [v for v in members if net.vertex(v).kinetic is not None]
                rep, rule = (kinetic or list(members))[0], "lowest id"
        logger.debug("Class %s represented by %d (%s)", members, rep, rule)
        chosen.append(rep)
    return frozenset(chosen)


def _fresh_names(taken, prefix="phi"):
    counter = 1
    while True:
        name = f"{prefix}{counter}"
        if name not in taken:
            taken.add(name)
            yield name
        counter += 1


class Redirection(NamedTuple):
    network: object
    substitutions: dict


def redirect(net, vstar=None):
    """
    Reroute effective edges to class representatives and rebuild phantom edges

    Args:
        net: Gcrn
        vstar: representative vertex ids; default_vstar(net) when omitted

    Returns:
        Redirection(network, substitutions) where substitutions maps every
        merged rate symbol to the sympy sum of the rates it replaces

    Raises:
        SectionError: vstar is not a section, or a representative of a class
            with other members has no kinetic complex
    """
    condensed = condense(net)
    if vstar is None:
        vstar = default_vstar(net)
    rho = representatives(net, vstar, condensed)
    for index, members in enumerate(condensed.classes):
        rep = rho[index]
        if len(members) > 1 and net.vertex(rep).kinetic is None:
            raise SectionError(f"representative {rep} has no kinetic complex and cannot source phantom edges")
    rep_of = {v: rho[index] for index, members in enumerate(condensed.classes) for v in members}

    groups = {}
    order = []
    for edge in net.edges:
        if edge.kind is EdgeKind.PHANTOM:
            continue
        key = (edge.source, rep_of[edge.target])
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(edge)

    substitutions = {}
    effective = []
    for key in order:
        group = groups[key]
        rerouted = [e for e in group if e.target != key[1]]
        if not rerouted:
            effective.extend(group)
            continue
        for edge in rerouted:
            logger.info("Rerouting %s: %d->%d becomes %d->%d", edge.name, edge.source, edge.target, *key)
        if len(group) == 1:
            effective.append(Edge(key[0], key[1], group[0].label))
            continue
        names = sort_symbols(e.name for e in group)
        merged = "+".join(names)
        substitutions[merged] = sp.Add(*(symbol(n) for n in names))
        logger.info("Merging %s into one edge %d->%d", ", ".join(names), *key)
        effective.append(Edge(key[0], key[1], RateSymbol(merged)))

    existing = {}
    for edge in net.edges:
        if edge.kind is EdgeKind.PHANTOM:
            existing.setdefault((edge.source, edge.target), edge.label)
    taken = {e.name for e in net.edges} | set(substitutions)
    fresh = _fresh_names(taken)
    phantom = []
    for index, members in enumerate(condensed.classes):
        rep = rho[index]
        for j in members:
            if j == rep:
                continue
            label = existing.get((rep, j)) or RateSymbol(next(fresh), SymbolRole.PHANTOM_PARAMETER)
            phantom.append(Edge(rep, j, label))

    return Redirection(net.with_edges(effective + phantom), substitutions)
