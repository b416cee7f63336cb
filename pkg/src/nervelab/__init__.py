"""Finite strict 2-categories, Theta combinatorics, nerves and exact homology."""
__version__ = "0.1.0"
