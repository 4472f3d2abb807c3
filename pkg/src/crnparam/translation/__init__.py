"""
Translation of classical networks into generalized networks
"""

from .translate import Translation, TranslationCertificate, TranslationScheme, certify, translate

__all__ = ["Translation", "TranslationCertificate", "TranslationScheme", "certify", "translate"]
