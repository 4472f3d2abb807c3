"""
Network and translation-scheme file formats
"""

from .parser import NetworkFile, network_document, parse_network, parse_scheme, read_network, render_network

__all__ = [
    "NetworkFile",
    "network_document",
    "parse_network",
    "parse_scheme",
    "read_network",
    "render_network",
]
