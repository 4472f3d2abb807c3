"""
Line-oriented text formats for networks and translation schemes

Network files::

    # comment
    @species X Xp Y Yp
    @mas
    X + Y -> Xp + Y ; k1
    A <-> B ; k2, k3
    @values k1=0.5

or, for generalized networks, ``@gcrn`` with vertices written as
``v1:[stoich | kinetic]``, ``[stoich | kinetic]``, ``[stoich]`` or a bare
``v1`` and phantom labels as ``; phantom phi1``.

``@values`` assigns rate values; verification uses them for its first sample
point and draws every other symbol.

Scheme files::

    r1: + Y
    r2, r3: + 0
    r4-r6: + XD + XT
    attach r8 -> r9
    phantom v3 -> v4
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import NetworkError, ParseError
from ..network import Complex, Edge, EdgeKind, Gcrn, RateSymbol, SymbolRole, Vertex
from ..translation import TranslationScheme

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_LABEL = re.compile(r"[A-Za-z_][A-Za-z0-9_]*(?:\+[A-Za-z_][A-Za-z0-9_]*)*")
_TERM = re.compile(r"(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z_][A-Za-z0-9_]*)")
_ARROW = re.compile(r"<->|->")
_VERTEX = re.compile(r"(?:v(\d+)\s*(:)?\s*)?(?:\[(.*)\])?")
_REACTION_IDS = re.compile(r"r(\d+)(?:\s*-\s*r(\d+))?")
_PAIR = re.compile(r"(v|r)(\d+)\s*->\s*(v|r)(\d+)")


@dataclass(frozen=True)
class NetworkFile:
    """
    A parsed network file

    reaction_lines holds the reaction numbers defined by each reaction line,
    one number for ``->`` and (forward, backward) for ``<->``.
    """

    network: Gcrn
    kind: str
    species_declared: bool = False
    values: dict = field(default_factory=dict)
    reaction_lines: tuple = ()


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            yield number, content


def _indent(text):
    return len(text) - len(text.lstrip())


def _parse_complex(text, offset, line):
    """
    Parse ``2*X + Y`` or ``0``

    Args:
        offset: 0-based column of text within its line

    Returns:
        {species name: Fraction} in appearance order
    """
    if not text.strip():
        raise ParseError("empty complex", line, offset + len(text) + 1)
    if text.strip() == "0":
        return {}
    result = {}
    position = 0
    for piece in text.split("+"):
        column = offset + position + _indent(piece) + 1
        position += len(piece) + 1
        term = piece.strip()
        if not term:
            raise ParseError("empty term in complex", line, column)
        match = _TERM.fullmatch(term)
        if not match:
            raise ParseError(f"malformed term {term!r}", line, column)
        coefficient = Fraction(match.group(1) or 1)
        if not coefficient:
            raise ParseError("zero coefficient", line, column)
        name = match.group(2)
        result[name] = result.get(name, 0) + coefficient
    return result


def _split_reaction(content, line):
    """Split ``lhs ARROW rhs ; labels`` into located parts"""
    semi = content.find(";")
    if semi < 0:
        raise ParseError("missing ';' before the rate labels", line, len(content) + 1)
    body = content[:semi]
    arrows = list(_ARROW.finditer(body))
    if not arrows:
        raise ParseError("missing '->' or '<->'", line, _indent(body) + 1)
    if len(arrows) > 1:
        raise ParseError("more than one arrow", line, arrows[1].start() + 1)
    arrow = arrows[0]
    lhs = (body[: arrow.start()], 0)
    rhs = (body[arrow.end():], arrow.end())
    return lhs, rhs, arrow.group(0) == "<->", (content[semi + 1:], semi + 1)


def _parse_labels(text, offset, line, count, allow_phantom):
    stripped = text.strip()
    phantom = False
    if stripped.startswith("phantom ") or stripped == "phantom":
        if not allow_phantom:
            raise ParseError("phantom labels belong to @gcrn sections", line, offset + _indent(text) + 1)
        phantom = True
        cut = text.index("phantom") + len("phantom")
        offset += cut
        text = text[cut:]
    labels = []
    position = 0
    for piece in text.split(","):
        column = offset + position + _indent(piece) + 1
        position += len(piece) + 1
        name = piece.strip()
        if not _LABEL.fullmatch(name):
            raise ParseError(f"invalid rate label {name!r}", line, column)
        labels.append((name, column))
    if len(labels) != count:
        raise ParseError(f"expected {count} rate label(s), got {len(labels)}", line, offset + 1)
    return labels, phantom


def _parse_vertex(text, offset, line):
    stripped = text.strip()
    lead = offset + _indent(text)
    match = _VERTEX.fullmatch(stripped)
    if not match or (match.group(1) is None and match.group(3) is None):
        raise ParseError("expected a vertex such as v1:[X + Y | X]", line, lead + 1)
    if match.group(2) and match.group(3) is None:
        raise ParseError("missing '[stoich | kinetic]' after ':'", line, lead + len(stripped) + 1)
    vertex_id = int(match.group(1)) if match.group(1) else None
    if match.group(3) is None:
        return vertex_id, None, None, lead + 1
    inner, inner_offset = match.group(3), lead + match.start(3)
    parts = inner.split("|")
    if len(parts) > 2:
        raise ParseError("at most one '|' inside a vertex", line, inner_offset + len(parts[0]) + len(parts[1]) + 2)
    stoich = _parse_complex(parts[0], inner_offset, line)
    kinetic = None
    if len(parts) == 2:
        kinetic = _parse_complex(parts[1], inner_offset + len(parts[0]) + 1, line)
    return vertex_id, stoich, kinetic, lead + 1


def _complex_key(mapping):
    return None if mapping is None else tuple(sorted(mapping.items()))


class _NetworkBuilder:
    """Accumulates parsed lines and resolves species, vertices and edges"""

    def __init__(self):
        self.kind = None
        self.declared = None
        self.appearance = []
        self.values = {}
        self.reactions = []
        self.refs = []
        self.reaction_lines = []

    def note_species(self, *mappings):
        for mapping in mappings:
            for name in mapping or {}:
                if name not in self.appearance:
                    self.appearance.append(name)

    def species(self):
        if self.declared is None:
            return tuple(self.appearance)
        return tuple(self.declared)


def _directive(builder, content, line):
    stripped = content.strip()
    word, _, rest = stripped.partition(" ")
    rest_offset = content.index(word) + len(word) + 1
    if word == "@species":
        if builder.declared is not None:
            raise ParseError("@species given twice", line, 1)
        if builder.reactions or builder.refs:
            raise ParseError("@species must precede the reactions", line, 1)
        names, position = [], 0
        for token in rest.split():
            position = rest.index(token, position)
            if not _NAME.fullmatch(token):
                raise ParseError(f"invalid species name {token!r}", line, rest_offset + position + 1)
            if token in names:
                raise ParseError(f"species {token} declared twice", line, rest_offset + position + 1)
            names.append(token)
            position += len(token)
        builder.declared = names
    elif word in ("@mas", "@gcrn"):
        kind = word[1:]
        if builder.kind is not None and builder.kind != kind:
            raise ParseError("a file holds either @mas or @gcrn reactions, not both", line, 1)
        builder.kind = kind
    elif word == "@values":
        position = 0
        for token in rest.split():
            position = rest.index(token, position)
            name, eq, value = token.partition("=")
            column = rest_offset + position + 1
            if not eq or not _LABEL.fullmatch(name):
                raise ParseError(f"expected name=value, got {token!r}", line, column)
            try:
                builder.values[name] = float(value)
            except ValueError:
                raise ParseError(f"invalid number {value!r}", line, column + len(name) + 1) from None
            position += len(token)
    else:
        raise ParseError(f"unknown directive {word}", line, _indent(content) + 1)


def _mas_line(builder, content, line):
    (lhs, lhs_off), (rhs, rhs_off), reversible, (labels_text, labels_off) = _split_reaction(content, line)
    source = _parse_complex(lhs, lhs_off, line)
    target = _parse_complex(rhs, rhs_off, line)
    labels, _ = _parse_labels(labels_text, labels_off, line, 2 if reversible else 1, allow_phantom=False)
    builder.note_species(source, target)
    if _complex_key(source) == _complex_key(target):
        raise ParseError("reaction between identical complexes", line, 1)
    first = len(builder.reactions) + 1
    builder.reactions.append((line, source, target, labels[0], False))
    if reversible:
        builder.reactions.append((line, target, source, labels[1], False))
        builder.reaction_lines.append((first, first + 1))
    else:
        builder.reaction_lines.append((first,))


def _gcrn_line(builder, content, line):
    if ";" not in content and not _ARROW.search(content):
        ref = _parse_vertex(content, 0, line)
        if ref[1] is None:
            raise ParseError("a vertex declaration needs '[stoich | kinetic]'", line, ref[3])
        builder.note_species(ref[1], ref[2])
        builder.refs.append((line, ref))
        return
    (lhs, lhs_off), (rhs, rhs_off), reversible, (labels_text, labels_off) = _split_reaction(content, line)
    source = _parse_vertex(lhs, lhs_off, line)
    target = _parse_vertex(rhs, rhs_off, line)
    labels, phantom = _parse_labels(labels_text, labels_off, line, 2 if reversible else 1, allow_phantom=True)
    if phantom and reversible:
        raise ParseError("phantom labels apply to a single '->' edge", line, labels_off + 1)
    for ref in (source, target):
        builder.note_species(ref[1], ref[2])
        builder.refs.append((line, ref))
    first = len(builder.reactions) + 1
    builder.reactions.append((line, source, target, labels[0], phantom))
    if reversible:
        builder.reactions.append((line, target, source, labels[1], phantom))
        builder.reaction_lines.append((first, first + 1))
    else:
        builder.reaction_lines.append((first,))


def _to_complex(mapping, index, line):
    if mapping is None:
        return None
    try:
        return Complex.from_mapping({index[name]: c for name, c in mapping.items()})
    except KeyError as e:
        raise ParseError(f"species {e.args[0]} is not declared in @species", line, 1) from None


def _resolve_mas(builder, index):
    vertices, ids, edges = [], {}, []
    for line, source, target, label, _ in builder.reactions:
        endpoints = []
        for mapping in (source, target):
            key = _complex_key(mapping)
            if key not in ids:
                ids[key] = len(ids) + 1
                complex_ = _to_complex(mapping, index, line)
                vertices.append(Vertex(ids[key], complex_, complex_))
            endpoints.append(ids[key])
        edges.append((line, endpoints[0], endpoints[1], label, False))
    return vertices, edges


def _resolve_gcrn(builder, index):
    explicit = {}
    for line, (vertex_id, stoich, kinetic, column) in builder.refs:
        if vertex_id is None or stoich is None:
            continue
        key = (_complex_key(stoich), _complex_key(kinetic))
        if vertex_id in explicit:
            known_stoich, known_kinetic = explicit[vertex_id][0]
            if known_stoich != key[0] or (known_kinetic and key[1] and known_kinetic != key[1]):
                raise ParseError(f"vertex v{vertex_id} redefined with different complexes", line, column)
            if key[1] and not known_kinetic:
                explicit[vertex_id] = (key, (stoich, kinetic), line)
            continue
        explicit[vertex_id] = (key, (stoich, kinetic), line)

    assigned = {}
    for vertex_id in sorted(explicit):
        key, _, _ = explicit[vertex_id]
        assigned.setdefault(key, vertex_id)
    complexes = {vertex_id: (entry[1], entry[2]) for vertex_id, entry in explicit.items()}
    next_id = 1

    def resolve(ref, line):
        nonlocal next_id
        vertex_id, stoich, kinetic, column = ref
        if vertex_id is not None:
            if vertex_id not in explicit:
                raise ParseError(f"vertex v{vertex_id} is never given complexes", line, column)
            return vertex_id
        key = (_complex_key(stoich), _complex_key(kinetic))
        if key not in assigned:
            while next_id in complexes:
                next_id += 1
            assigned[key] = next_id
            complexes[next_id] = ((stoich, kinetic), line)
        return assigned[key]

    edges = []
    for line, source, target, label, phantom in builder.reactions:
        edges.append((line, resolve(source, line), resolve(target, line), label, phantom))
    for line, ref in builder.refs:
        resolve(ref, line)

    vertices = []
    for vertex_id in sorted(complexes):
        (stoich, kinetic), line = complexes[vertex_id]
        vertices.append(Vertex(vertex_id, _to_complex(stoich, index, line), _to_complex(kinetic, index, line)))
    return vertices, edges


def read_network(text):
    """
    Parse a network file

    Returns:
        NetworkFile

    Raises:
        ParseError: with the 1-based line and column of the problem
    """
    builder = _NetworkBuilder()
    for line, content in _lines(text):
        if content.lstrip().startswith("@"):
            _directive(builder, content, line)
        elif builder.kind is None:
            raise ParseError("reaction before @mas or @gcrn", line, _indent(content) + 1)
        elif builder.kind == "mas":
            _mas_line(builder, content, line)
        else:
            _gcrn_line(builder, content, line)

    species = builder.species()
    index = {name: k for k, name in enumerate(species)}
    if builder.kind == "gcrn":
        vertices, raw_edges = _resolve_gcrn(builder, index)
    else:
        vertices, raw_edges = _resolve_mas(builder, index)

    by_id = {v.id: v for v in vertices}
    seen = {}
    edges = []
    for line, source, target, (name, column), phantom in raw_edges:
        if name in seen:
            raise ParseError(f"rate label {name} already used on line {seen[name]}", line, column)
        seen[name] = line
        if source == target:
            raise ParseError(f"self-loop at vertex v{source}", line, 1)
        if by_id[source].kinetic is None:
            raise ParseError(f"source vertex v{source} needs a kinetic complex", line, 1)
        if phantom and by_id[source].stoich != by_id[target].stoich:
            raise ParseError(f"phantom label {name} on an edge between different complexes", line, column)
        role = SymbolRole.PHANTOM_PARAMETER if phantom else SymbolRole.RATE_CONSTANT
        edges.append(Edge(source, target, RateSymbol(name, role)))

    try:
        network = Gcrn(species, vertices, edges)
    except NetworkError as e:
        raise ParseError(e.message) from e
    logger.debug(
        "Parsed %d species, %d vertices and %d edges", len(species), len(network.vertices), len(network.edges)
    )
    return NetworkFile(
        network=network,
        kind=builder.kind or "mas",
        species_declared=builder.declared is not None,
        values=dict(builder.values),
        reaction_lines=tuple(builder.reaction_lines),
    )


def parse_network(text):
    return read_network(text).network


def _format_vertex(net, vertex):
    stoich = vertex.stoich.format(net.species)
    if vertex.kinetic is None:
        return f"v{vertex.id}:[{stoich}]"
    return f"v{vertex.id}:[{stoich} | {vertex.kinetic.format(net.species)}]"


def render_network(net, values=None):
    """Render a network in the @gcrn format with explicit vertex ids"""
    lines = ["@species " + " ".join(net.species), "@gcrn"]
    used = set()
    for edge in net.edges:
        source, target = net.vertex(edge.source), net.vertex(edge.target)
        label = edge.name
        if edge.label.role is SymbolRole.PHANTOM_PARAMETER:
            label = f"phantom {label}"
        lines.append(f"{_format_vertex(net, source)} -> {_format_vertex(net, target)} ; {label}")
        used.update((edge.source, edge.target))
    for vertex in net.vertices:
        if vertex.id not in used:
            lines.append(_format_vertex(net, vertex))
    if values:
        lines.append("@values " + " ".join(f"{name}={value!r}" for name, value in values.items()))
    return "\n".join(lines) + "\n"


def _reaction_numbers(text, offset, line, count):
    numbers = []
    position = 0
    for piece in text.split(","):
        column = offset + position + _indent(piece) + 1
        position += len(piece) + 1
        match = _REACTION_IDS.fullmatch(piece.strip())
        if not match:
            raise ParseError(f"expected a reaction id like r3, got {piece.strip()!r}", line, column)
        low = int(match.group(1))
        high = int(match.group(2) or low)
        for number in (low, high):
            if not 1 <= number <= count:
                raise ParseError(f"unknown reaction id r{number}", line, column)
        if high < low:
            raise ParseError(f"empty range r{low}-r{high}", line, column)
        numbers.extend(range(low, high + 1))
    return numbers


def parse_scheme(text, network_file):
    """
    Parse a translation scheme for the reactions of network_file

    An entry for one direction of a ``<->`` line also applies to the other
    direction unless that direction has its own entry.

    Raises:
        ParseError: unknown reaction or species, malformed complex, or
            reactions left without an entry
    """
    net = network_file.network
    index = {name: k for k, name in enumerate(net.species)}
    count = len(net.edges)
    added = {}
    attachments = []
    phantoms = []
    for line, content in _lines(text):
        stripped = content.strip()
        lead = _indent(content)
        keyword, _, rest = stripped.partition(" ")
        if keyword in ("phantom", "attach"):
            match = _PAIR.fullmatch(rest.strip())
            expected = "v" if keyword == "phantom" else "r"
            if not match or match.group(1) != expected or match.group(3) != expected:
                raise ParseError(f"expected '{keyword} {expected}A -> {expected}B'", line, lead + len(keyword) + 2)
            pair = (int(match.group(2)), int(match.group(4)))
            if keyword == "phantom":
                phantoms.append(pair)
            else:
                for number in pair:
                    if not 1 <= number <= count:
                        raise ParseError(f"unknown reaction id r{number}", line, lead + 1)
                attachments.append(pair)
            continue
        colon = content.find(":")
        if colon < 0:
            raise ParseError("expected 'rN: + complex'", line, lead + 1)
        numbers = _reaction_numbers(content[:colon], 0, line, count)
        body = content[colon + 1:]
        body_offset = colon + 1
        if body.strip().startswith("+"):
            cut = body.index("+") + 1
            body, body_offset = body[cut:], body_offset + cut
        mapping = _parse_complex(body, body_offset, line)
        unknown = [name for name in mapping if name not in index]
        if unknown:
            raise ParseError(f"unknown species {unknown[0]}", line, body_offset + body.index(unknown[0]) + 1)
        complex_ = Complex.from_mapping({index[name]: c for name, c in mapping.items()})
        for number in numbers:
            if number in added:
                raise ParseError(f"reaction r{number} given twice", line, lead + 1)
            added[number] = complex_

    for group in network_file.reaction_lines:
        given = [n for n in group if n in added]
        if given:
            for n in group:
                added.setdefault(n, added[given[0]])

    missing = [n for n in range(1, count + 1) if n not in added]
    if missing:
        raise ParseError("scheme has no entry for " + ", ".join(f"r{n}" for n in missing))
    return TranslationScheme(
        added=tuple(added[n] for n in range(1, count + 1)),
        attachments=tuple(attachments),
        phantoms=tuple(phantoms),
    )


def network_document(net):
    """JSON-ready network: species names, vertices with complexes, labelled edges"""

    def complex_document(complex_):
        if complex_ is None:
            return None
        return {net.species[s]: str(c) for s, c in complex_.coefficients}

    return {
        "species": list(net.species),
        "vertices": [
            {"id": v.id, "stoich": complex_document(v.stoich), "kinetic": complex_document(v.kinetic)}
            for v in net.vertices
        ],
        "edges": [
            {
                "source": e.source,
                "target": e.target,
                "label": e.name,
                "kind": e.kind.name.lower(),
                "role": e.label.role.name.lower(),
            }
            for e in net.edges
        ],
    }
