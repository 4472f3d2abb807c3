from hypothesis import given, settings

from crnparam.network import (
    Complex,
    Edge,
    Gcrn,
    RateSymbol,
    Vertex,
    condense,
    deficiency_by_intersection,
    linkage_structure,
    partition_edges,
    structure_report,
)

from conftest import load_network_file
from strategies import classical_networks, generalized_networks


def test_partition_edges(four_vertex):
    effective, phantom = partition_edges(four_vertex)
    assert [e.name for e in effective] == ["k12", "k23", "k32", "k41"]
    assert [e.name for e in phantom] == ["k34"]


def test_linkage_structure_of_irreversible_reaction():
    a, b = Complex.from_mapping({0: 1}), Complex.from_mapping({1: 1})
    net = Gcrn(("A", "B"), [Vertex(1, a, a), Vertex(2, b, b)], [Edge(1, 2, RateSymbol("k1"))])
    linkage, strong, reversible = linkage_structure(net)
    assert linkage == ((1, 2),)
    assert strong == ((1,), (2,))
    assert not reversible


def test_four_vertex_structure(four_vertex):
    report = structure_report(four_vertex)
    assert report.m == 4
    assert report.linkage_count == 1
    assert report.s == 2
    assert report.s_kinetic == 3
    assert report.deficiency == 1
    assert report.kinetic_deficiency == 0
    assert report.effective_deficiency == 0
    assert report.m_condensed == 3
    assert report.weakly_reversible
    assert report.strong_linkage_classes == ((1, 2, 3, 4),)


def test_four_vertex_condensation(four_vertex):
    condensed = condense(four_vertex)
    assert condensed.classes == ((1,), (2,), (3, 4))
    assert condensed.edges == ((0, 1), (1, 2), (2, 0), (2, 1))
    assert condensed.class_of(4) == 2
    assert condensed.n_linkage_classes == 1
    classical = condensed.to_gcrn()
    assert classical.is_classical()
    assert classical.symbol_names() == ("c1_2", "c2_3", "c3_1", "c3_2")
    assert "[3] {3, 4}: X1 + X4" in condensed.format()


def test_histidine_structure(histidine):
    _, translated, _ = histidine
    report = structure_report(translated)
    assert (report.deficiency, report.kinetic_deficiency, report.effective_deficiency) == (1, 0, 0)
    assert report.weakly_reversible


def test_envz_and_wnt_effective_deficiency(envz, wnt):
    assert structure_report(envz[1]).effective_deficiency == 0
    report = structure_report(wnt[1])
    assert report.m == 22
    assert report.deficiency == 2
    assert report.kinetic_deficiency == 0
    assert report.effective_deficiency == 0


def test_report_serialization(four_vertex):
    report = structure_report(four_vertex)
    document = report.to_dict()
    assert document["kinetic_deficiency"] == 0
    assert document["linkage_classes"] == [[1, 2, 3, 4]]
    assert "kinetic deficiency: 0" in report.format()


def test_missing_kinetic_complex_reported_as_unavailable():
    a, b = Complex.from_mapping({0: 1}), Complex.from_mapping({1: 1})
    net = Gcrn(("A", "B"), [Vertex(1, a, a), Vertex(2, b)], [Edge(1, 2, RateSymbol("k1"))])
    report = structure_report(net)
    assert report.s_kinetic is None
    assert report.kinetic_deficiency is None
    assert "n/a" in report.format()


def test_kinetic_deficiency_needs_every_vertex_to_be_a_source():
    # histidine as written: the products of two reactions never react
    net = load_network_file("histidine.mas").network
    assert net.all_kinetic()
    assert net.source_ids() != set(net.vertex_ids)
    report = structure_report(net)
    assert report.s_kinetic is None
    assert report.kinetic_deficiency is None
    assert report.to_dict()["kinetic_deficiency"] is None
    assert "kinetic deficiency: n/a" in report.format()


@settings(max_examples=100)
@given(classical_networks())
def test_deficiency_identities_classical(net):
    report = structure_report(net)
    assert report.deficiency >= 0
    assert report.deficiency == deficiency_by_intersection(net)
    # classical networks have nothing to condense
    assert report.effective_deficiency == report.deficiency
    if net.source_ids() == set(net.vertex_ids):
        assert report.kinetic_deficiency == report.deficiency
    else:
        assert report.kinetic_deficiency is None
        assert report.s_kinetic is None


@settings(max_examples=100)
@given(generalized_networks())
def test_deficiency_identities_generalized(net):
    report = structure_report(net)
    assert report.deficiency == deficiency_by_intersection(net)
    assert report.kinetic_deficiency == deficiency_by_intersection(net, kinetic=True)
    assert 0 <= report.effective_deficiency <= report.deficiency
    if net.source_ids() == set(net.vertex_ids):
        assert report.kinetic_deficiency >= 0
    else:
        assert report.kinetic_deficiency is None


@settings(max_examples=100)
@given(generalized_networks())
def test_condense_is_idempotent(net):
    once = condense(net)
    twice = condense(once.to_gcrn())
    assert twice.classes == tuple((k + 1,) for k in range(len(once.classes)))
    assert twice.complexes == once.complexes
    assert twice.edges == once.edges
