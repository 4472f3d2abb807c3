"""
Exact symbolic equilibrium parametrization of generalized mass-action reaction networks
"""

__version__ = "0.1.0"
