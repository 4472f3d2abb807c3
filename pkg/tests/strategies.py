"""
Hypothesis strategies for random digraphs, networks and rational matrices
"""

from fractions import Fraction

import hypothesis.strategies as st

from crnparam.algebra import rational_matrix
from crnparam.network import Complex, Edge, Gcrn, RateSymbol, Vertex
from crnparam.translation import TranslationScheme

SPECIES = ("A", "B", "C", "D", "E", "F")


@st.composite
def strongly_connected_digraphs(draw, max_vertices=6):
    """
    Classical network on one species whose graph is strongly connected

    A random Hamiltonian cycle guarantees strong connectivity; extra edges
    are added on top.
    """
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    order = draw(st.permutations(range(1, n + 1)))
    pairs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    candidates = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b and (a, b) not in pairs]
    if candidates:
        pairs |= set(draw(st.lists(st.sampled_from(candidates), max_size=len(candidates), unique=True)))
    vertices = [Vertex(v, Complex.from_mapping({0: v}), Complex.from_mapping({0: v})) for v in range(1, n + 1)]
    edges = [Edge(a, b, RateSymbol(f"k{e + 1}")) for e, (a, b) in enumerate(sorted(pairs))]
    return Gcrn(("X",), vertices, edges)


def complexes(n_species, max_coefficient=2):
    return st.lists(
        st.integers(min_value=0, max_value=max_coefficient), min_size=n_species, max_size=n_species
    ).map(lambda values: Complex.from_mapping(dict(enumerate(values))))


@st.composite
def classical_networks(draw, max_species=6, max_reactions=8):
    """Mass-action network with distinct reactant and product complexes"""
    n = draw(st.integers(min_value=1, max_value=max_species))
    pairs = draw(
        st.lists(
            st.tuples(complexes(n), complexes(n)).filter(lambda p: p[0] != p[1]),
            min_size=1,
            max_size=max_reactions,
            unique=True,
        )
    )
    ids = {}
    for pair in pairs:
        for complex_ in pair:
            ids.setdefault(complex_, len(ids) + 1)
    vertices = [Vertex(v, c, c) for c, v in ids.items()]
    edges = [Edge(ids[a], ids[b], RateSymbol(f"k{e + 1}")) for e, (a, b) in enumerate(pairs)]
    return Gcrn(SPECIES[:n], vertices, edges)


@st.composite
def generalized_networks(draw, max_species=4, max_vertices=6):
    """
    Network whose vertices draw stoichiometric complexes from a small pool,
    so that classes with several vertices and phantom edges occur
    """
    n = draw(st.integers(min_value=1, max_value=max_species))
    pool = draw(st.lists(complexes(n), min_size=1, max_size=3, unique=True))
    m = draw(st.integers(min_value=2, max_value=max_vertices))
    vertices = [
        Vertex(v, draw(st.sampled_from(pool)), draw(complexes(n)))
        for v in range(1, m + 1)
    ]
    candidates = [(a, b) for a in range(1, m + 1) for b in range(1, m + 1) if a != b]
    pairs = draw(st.lists(st.sampled_from(candidates), min_size=1, max_size=8, unique=True))
    edges = [Edge(a, b, RateSymbol(f"k{e + 1}")) for e, (a, b) in enumerate(pairs)]
    return Gcrn(SPECIES[:n], vertices, edges)


@st.composite
def translation_schemes(draw, crn, max_coefficient=1):
    added = tuple(draw(complexes(crn.n_species, max_coefficient)) for _ in crn.edges)
    return TranslationScheme(added)


@st.composite
def rational_matrices(draw, max_rows=8, max_cols=12):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entry = st.builds(
        Fraction,
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=1, max_value=3),
    )
    zero_heavy = st.one_of(st.just(Fraction(0)), entry)
    values = draw(st.lists(st.lists(zero_heavy, min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return rational_matrix(values, cols)
