"""
Configuration utilities for crnparam
"""

import copy
import json
import logging
import os
import platform

logger = logging.getLogger(__name__)


DEFAULT_CONFIG = {
    "tree_constants": {
        "method": "cofactor",  # cofactor or enumerate
        "enumeration_limit": 6,  # Largest class the enumeration accepts
        "laplace_limit": 9,  # Largest class expanded by minors under "auto"
        "determinant": "auto"  # auto, bareiss or laplace
    },
    "verify": {
        "samples": 100,
        "low": 0.1,
        "high": 10.0
    },
    "output": {
        "format": "text",  # text, json or latex
        "indent": 2
    }
}


def get_config_path():
    """Get the path to the config file"""
    system = platform.system()
    if system == "Windows":
        config_dir = os.path.join(os.environ.get("APPDATA", os.path.expanduser("~")), "CrnParam")
    elif system == "Darwin":  # macOS
        config_dir = os.path.join(os.path.expanduser("~"), "Library", "Application Support", "CrnParam")
    else:  # Linux and others
        config_dir = os.path.join(os.path.expanduser("~"), ".config", "crnparam")

    return os.path.join(config_dir, "config.json")


def load_config(path=None):
    """
    Load configuration, merging a JSON file over the defaults

    Args:
        path: Explicit config file; the platform location is used when omitted

    Returns:
        Configuration dict with every default section present
    """
    merged_config = copy.deepcopy(DEFAULT_CONFIG)
    config_path = path or get_config_path()

    if not os.path.exists(config_path):
        if path is not None:
            logger.warning("Config file %s not found, using defaults", path)
        return merged_config

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config = json.load(f)
    except (OSError, ValueError) as e:
        logger.warning("Error loading config %s: %s", config_path, e)
        return merged_config

    if not isinstance(config, dict):
        logger.warning("Ignoring config %s: top level is not an object", config_path)
        return merged_config

    # Merge with default to ensure all keys exist
    for section, values in config.items():
        if section in merged_config and isinstance(values, dict):
            merged_config[section].update(values)
        else:
            logger.warning("Ignoring unknown config section %r", section)

    return merged_config


def update_config(config, updates):
    """Return a copy of config with specific section values replaced"""
    updated = copy.deepcopy(config)
    for section, values in updates.items():
        updated.setdefault(section, {}).update(values)
    return updated
