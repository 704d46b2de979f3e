"""Exact combinatorics of operads, crossed simplicial groups and dihedral bar constructions."""

__version__ = "0.1.0"
