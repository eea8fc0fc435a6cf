"""Genus-2 moduli points over Q: invariants, heights, enumeration, fine/coarse."""

__version__ = "0.1.0"
