"""Edges of K_2n, difference sets, group actions and connectivity."""

from regfact.graph.connectivity import (
    UnionFind,
    components,
    is_perfect_matching,
    is_spanning_connected,
    is_spanning_tree,
)
from regfact.graph.edges import (
    Edge,
    EdgeSet,
    act,
    all_edges,
    associated_involution,
    delta,
    difference_multiset,
    format_edge,
    format_edges,
    is_short,
    orbit,
    parse_edge,
    phi,
    translate,
)

__all__ = [
    "Edge",
    "EdgeSet",
    "UnionFind",
    "act",
    "all_edges",
    "associated_involution",
    "components",
    "delta",
    "difference_multiset",
    "format_edge",
    "format_edges",
    "is_perfect_matching",
    "is_short",
    "is_spanning_connected",
    "is_spanning_tree",
    "orbit",
    "parse_edge",
    "phi",
    "translate",
]
