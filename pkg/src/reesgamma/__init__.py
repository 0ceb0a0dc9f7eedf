"""Exact verification of Rees-product and Schur gamma-positivity identities."""

__version__ = "0.1.0"
