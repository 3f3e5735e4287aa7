"""Homomorphism bounds for signed bipartite partial t-trees."""

__version__ = "0.1.0"
