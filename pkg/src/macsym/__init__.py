"""Exact symmetric-function toolkit for the characteristic map of GL(2n,q)/Sp(2n,q)."""

__version__ = "0.1.0"
