import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from crnparam.errors import SchemeError
from crnparam.network import Complex, EdgeKind, ode_rhs, structure_report
from crnparam.translation import TranslationScheme, certify, translate

from conftest import load_network_file
from strategies import classical_networks, translation_schemes

ZERO = Complex.zero()
X, Y = Complex.from_mapping({0: 1}), Complex.from_mapping({2: 1})


@pytest.fixture(scope="module")
def histidine_crn():
    return load_network_file("histidine.mas").network


def test_histidine_translation_matches_published_graph(histidine_crn):
    scheme = TranslationScheme((Y, ZERO, ZERO, X), phantoms=((3, 4),))
    translated, edge_map = translate(histidine_crn, scheme)
    assert translated == load_network_file("histidine.gcrn").network
    assert edge_map == (0, 1, 2, 3)
    assert translated.phantom_symbols() == ("phi",)
    assert certify(histidine_crn, translated, edge_map).valid


def test_fixture_schemes_are_certified(histidine, envz, wnt):
    for crn, translated, edge_map in (histidine, envz, wnt):
        certificate = certify(crn, translated, edge_map)
        assert certificate.valid, certificate.failures()
        assert structure_report(translated).weakly_reversible


def test_envz_graph(envz):
    _, translated, _ = envz
    assert translated.n_vertices == 9
    assert (9, 6, "k13") in {(e.source, e.target, e.name) for e in translated.edges}
    assert translated.phantom_symbols() == ("phi",)


def test_auto_phantom(histidine_crn):
    scheme = TranslationScheme((Y, ZERO, ZERO, X))
    translated, _ = translate(histidine_crn, scheme, auto_phantom=True)
    phantom = [(e.source, e.target, e.name) for e in translated.edges if e.kind is EdgeKind.PHANTOM]
    assert phantom == [(3, 4, "phi1")]


def test_identity_translation(histidine_crn):
    translated, edge_map = translate(histidine_crn, TranslationScheme.identity(4))
    assert translated.is_classical()
    assert certify(histidine_crn, translated, edge_map).valid


def test_certificate_reports_broken_translation(histidine):
    crn, translated, edge_map = histidine
    shifted = edge_map[1:] + edge_map[:1]
    certificate = certify(crn, translated, shifted)
    assert not certificate.valid
    assert "ODE right-hand sides differ" in certificate.failures()
    assert certificate.to_dict()["valid"] is False


@pytest.mark.parametrize(
    "scheme, message",
    [
        (TranslationScheme((Y, ZERO, ZERO)), "missing r4"),
        (TranslationScheme((Y, ZERO, ZERO, X), attachments=((1, 9),)), "unknown reaction"),
        (TranslationScheme((Y, ZERO, ZERO, X), attachments=((1, 4),)), "cannot attach"),
        (TranslationScheme((Y, ZERO, ZERO, X), phantoms=((3, 7),)), "unknown vertex"),
        (TranslationScheme((Y, ZERO, ZERO, X), phantoms=((1, 3),)), "unequal stoichiometric"),
    ],
)
def test_scheme_errors(histidine_crn, scheme, message):
    with pytest.raises(SchemeError, match=message):
        translate(histidine_crn, scheme)


def test_generalized_input_rejected(four_vertex):
    with pytest.raises(SchemeError, match="classical"):
        translate(four_vertex, TranslationScheme.identity(len(four_vertex.edges)))


@settings(max_examples=100)
@given(st.data())
def test_translation_preserves_dynamics(data):
    crn = data.draw(classical_networks())
    scheme = data.draw(translation_schemes(crn))
    translated, edge_map = translate(crn, scheme)
    certificate = certify(crn, translated, edge_map)
    assert certificate.valid, certificate.failures()
    assert ode_rhs(translated) == ode_rhs(crn)
