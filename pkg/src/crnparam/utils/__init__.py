"""
Utility modules for crnparam
"""
