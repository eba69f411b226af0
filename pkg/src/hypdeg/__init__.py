"""Degree sequences of uniform and balanced hypergraphs: lattice and zonotope
membership, exact realizability, and verified non-convexity certificates."""

__version__ = "0.1.0"
