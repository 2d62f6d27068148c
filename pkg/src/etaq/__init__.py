"""Exact q-series arithmetic, eta-quotient expansions, and congruence checks."""

__version__ = "0.1.0"
