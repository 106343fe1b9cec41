"""Exact computations with braids, twist actions on homology, and SL(2,Z)."""

__version__ = "0.1.0"
