import os

import hypothesis
import pytest

from crnparam.algebra import symbol
from crnparam.fileio import parse_scheme, read_network
from crnparam.translation import translate

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=5)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

NETWORKS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "networks")


def network_path(name):
    return os.path.join(NETWORKS_DIR, name)


def load_network_file(name):
    with open(network_path(name), encoding="utf-8") as f:
        return read_network(f.read())


def load_translated(name):
    """(classical network, translated network, edge map) for name.mas with name.scheme"""
    network_file = load_network_file(f"{name}.mas")
    with open(network_path(f"{name}.scheme"), encoding="utf-8") as f:
        scheme = parse_scheme(f.read(), network_file)
    translated, edge_map = translate(network_file.network, scheme)
    return network_file.network, translated, edge_map


def k(*indices):
    """Product of rate symbols k<i>"""
    result = 1
    for i in indices:
        result = result * symbol(f"k{i}")
    return result


def sym(name):
    return symbol(name)


@pytest.fixture(scope="session")
def histidine():
    return load_translated("histidine")


@pytest.fixture(scope="session")
def envz():
    return load_translated("envz")


@pytest.fixture(scope="session")
def wnt():
    return load_translated("wnt")


@pytest.fixture(scope="session")
def four_vertex():
    return load_network_file("four_vertex.gcrn").network


@pytest.fixture
def fixture_networks(histidine, envz, four_vertex):
    """Translated networks small enough for exhaustive checks"""
    return {"histidine": histidine[1], "envz": envz[1], "four_vertex": four_vertex}
