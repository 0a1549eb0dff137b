"""Exact spanning-tree enumerators and their factorization for distance-hereditary graphs."""

from .enumerator import Enumerator, factor_enumerator, graph_enumerator
from .graph import Graph
from .linalg import enumerator_value, tree_count

__all__ = ["Enumerator", "Graph", "enumerator_value", "factor_enumerator",
           "graph_enumerator", "tree_count"]
