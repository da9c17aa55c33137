"""Finite Co-Segal machinery: lax diagrams over chains, free constructions,
colimits, Co-Segalification in a decidable instance, and colored operads."""

__version__ = "0.1.0"
