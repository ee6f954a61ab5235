"""Discriminants and invariants of determinantal singularities."""

__version__ = "0.1.0"
