import io
import json

import pytest

from crnparam.cli import build_parser, main
from crnparam.fileio import parse_network

from conftest import load_network_file, network_path

HISTIDINE = network_path("histidine.mas")
HISTIDINE_SCHEME = network_path("histidine.scheme")
FOUR_VERTEX = network_path("four_vertex.gcrn")


def run(*argv):
    stdout = io.StringIO()
    status = main(list(argv), stdout=stdout)
    return status, stdout.getvalue()


def test_analyze_json():
    status, out = run("analyze", HISTIDINE, "--json")
    assert status == 0
    document = json.loads(out)
    assert document["deficiency"] == 1
    assert document["weakly_reversible"] is False


def test_analyze_text():
    status, out = run("analyze", FOUR_VERTEX)
    assert status == 0
    assert "kinetic deficiency: 0" in out


def test_parametrize_translated_histidine():
    status, out = run("parametrize", HISTIDINE, "--scheme", HISTIDINE_SCHEME, "--json")
    assert status == 0
    document = json.loads(out)
    assert document["vstar"] == [1, 2, 3]
    assert document["parametrization"]["free_phantoms"] == ["phi"]
    assert document["structure"]["kinetic_deficiency"] == 0


def test_parametrize_text_and_latex():
    status, out = run("parametrize", network_path("envz.mas"), "--scheme", network_path("envz.scheme"))
    assert status == 0
    assert "absolute concentration robustness: Yp" in out
    status, out = run("parametrize", HISTIDINE, "--scheme", HISTIDINE_SCHEME, "--latex")
    assert status == 0
    assert out.startswith("\\begin{aligned}")


def test_analysis_refusal_exits_one():
    status, out = run("parametrize", HISTIDINE, "--json")
    assert status == 1
    assert json.loads(out)["error"]["type"] == "AnalysisError"


def test_parse_error_exits_two(tmp_path):
    path = tmp_path / "broken.mas"
    path.write_text("@mas\nX -> ; k1\n")
    status, out = run("analyze", str(path), "--json")
    assert status == 2
    error = json.loads(out)["error"]
    assert error == {"type": "ParseError", "message": "empty complex", "line": 2, "column": 6}


def test_scheme_error_reported_as_parse_error(tmp_path):
    path = tmp_path / "bad.scheme"
    path.write_text("r1: + Z\n")
    status, out = run("translate", HISTIDINE, "--scheme", str(path), "--json")
    assert status == 2
    error = json.loads(out)["error"]
    assert error["type"] == "ParseError"
    assert "unknown species Z" in error["message"]


def test_missing_file(tmp_path):
    status, out = run("analyze", str(tmp_path / "absent.mas"), "--json")
    assert status == 1
    assert json.loads(out)["error"]["type"] == "CrnError"


def test_translate_renders_published_graph():
    status, out = run("translate", HISTIDINE, "--scheme", HISTIDINE_SCHEME)
    assert status == 0
    assert out.rstrip().endswith("# certificate: valid")
    assert parse_network(out) == load_network_file("histidine.gcrn").network


def test_redirect_and_condense():
    status, out = run("redirect", FOUR_VERTEX, "--vstar", "1,2,4")
    assert status == 0
    assert "# V* = {1, 2, 4}" in out
    assert "v4:[X1 + X4 | X4] -> v3:[X1 + X4 | X1 + X4] ; phantom phi1" in out
    status, out = run("condense", FOUR_VERTEX)
    assert status == 0
    assert "[3] {3, 4}: X1 + X4" in out


def test_section_error():
    status, out = run("redirect", FOUR_VERTEX, "--vstar", "1,2", "--json")
    assert status == 1
    assert json.loads(out)["error"]["type"] == "SectionError"


def test_verify_passes():
    status, out = run("verify", HISTIDINE, "--scheme", HISTIDINE_SCHEME, "--samples", "5", "--json")
    assert status == 0
    document = json.loads(out)
    assert document["passed"] is True
    assert document["samples"] == 5
    assert document["seed"] == 42


def test_config_sets_output_defaults(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"output": {"format": "json", "indent": 4}}))
    status, out = run("--config", str(config), "analyze", FOUR_VERTEX)
    assert status == 0
    assert json.loads(out)["deficiency"] == 1
    assert '\n    "' in out


def test_bad_vstar_is_a_usage_error():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(["redirect", FOUR_VERTEX, "--vstar", "a,b"])
    assert info.value.code == 2


def test_invalid_utf8_is_a_parse_error(tmp_path):
    path = tmp_path / "latin1.mas"
    path.write_bytes(b"@species X\n@mas\nX -> 0 ; k\xe91\n")
    status, out = run("analyze", str(path), "--json")
    assert status == 2
    error = json.loads(out)["error"]
    assert error["type"] == "ParseError"
    assert "byte offset 26" in error["message"]
    assert (error["line"], error["column"]) == (3, 11)


def test_verify_samples_from_config_and_flag(tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"verify": {"samples": 3}}))
    args = ("verify", HISTIDINE, "--scheme", HISTIDINE_SCHEME, "--json")
    status, out = run("--config", str(config), *args)
    assert status == 0
    assert json.loads(out)["samples"] == 3
    status, out = run("--config", str(config), *args, "--samples", "4")
    assert json.loads(out)["samples"] == 4
