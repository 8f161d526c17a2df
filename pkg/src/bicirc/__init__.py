"""Permutation-group and graph-symmetry tools for edge-transitive bicirculants."""

from .bicirculant import BicirculantSymbol, build, canonical_symbol, enumerate_symbols, in_family_F, named_graph
from .graph import Graph, VertexPartition
from .perm import CapExceeded, Group, Perm, group_closure
from .symmetry import automorphism_group, find_isomorphism

__all__ = [
    "BicirculantSymbol", "CapExceeded", "Graph", "Group", "Perm", "VertexPartition",
    "automorphism_group", "build", "canonical_symbol", "enumerate_symbols",
    "find_isomorphism", "group_closure", "in_family_F", "named_graph",
]
