import json

from crnparam.utils import config as config_module
from crnparam.utils.config import DEFAULT_CONFIG, get_config_path, load_config, update_config


def test_defaults_when_platform_file_is_absent(tmp_path, monkeypatch):
    monkeypatch.setattr(config_module, "get_config_path", lambda: str(tmp_path / "none.json"))
    config = load_config()
    assert config == DEFAULT_CONFIG
    assert config is not DEFAULT_CONFIG


def test_file_merges_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"tree_constants": {"method": "enumerate"}, "verify": {"samples": 7}}))
    config = load_config(str(path))
    assert config["tree_constants"]["method"] == "enumerate"
    assert config["tree_constants"]["laplace_limit"] == 9
    assert config["verify"] == {"samples": 7, "low": 0.1, "high": 10.0}
    assert DEFAULT_CONFIG["verify"]["samples"] == 100


def test_malformed_file_is_ignored(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(str(path)) == DEFAULT_CONFIG
    assert "Error loading config" in caplog.text


def test_unknown_sections_are_ignored(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"camera": {"resolution": 3}}))
    assert "camera" not in load_config(str(path))
    assert "unknown config section" in caplog.text


def test_missing_explicit_file_warns(tmp_path, caplog):
    assert load_config(str(tmp_path / "absent.json")) == DEFAULT_CONFIG
    assert "not found" in caplog.text


def test_config_path_per_platform(monkeypatch):
    monkeypatch.setattr(config_module.platform, "system", lambda: "Linux")
    assert get_config_path().endswith("/.config/crnparam/config.json")
    monkeypatch.setattr(config_module.platform, "system", lambda: "Darwin")
    assert "Application Support" in get_config_path()


def test_update_config_copies():
    updated = update_config(DEFAULT_CONFIG, {"output": {"indent": 4}})
    assert updated["output"]["indent"] == 4
    assert DEFAULT_CONFIG["output"]["indent"] == 2
