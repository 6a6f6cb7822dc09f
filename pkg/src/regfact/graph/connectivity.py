"""Matching and connectivity predicates over group-labelled vertices."""

from typing import Iterable

from regfact.graph.edges import Edge
from regfact.groups.family import GroupElement, GroupFamily


class UnionFind:
    """Fast disjoint-set structure implementing the union-find algorithm."""

    def __init__(self, n: int) -> None:
        """Create ``n`` singleton sets labelled 0 .. n-1."""
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, element: int) -> int:
        """Canonical representative of the set containing ``element``."""
        root = element
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[element] != root:
            self.parent[element], element = root, self.parent[element]
        return root

    def unite(self, first: int, second: int) -> bool:
        """Merge two sets; returns False if they were already one set."""
        rep_first = self.find(first)
        rep_second = self.find(second)

        if rep_first == rep_second:
            return False

        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
            self.parent[rep_second] = rep_first
        elif self.rank[rep_first] > self.rank[rep_second]:
            self.parent[rep_second] = rep_first
        else:
            self.parent[rep_first] = rep_second

        self.components -= 1
        return True


def _union_of(edges: Iterable[Edge], G: GroupFamily) -> UnionFind:
    index = G.index_of
    uf = UnionFind(G.order)
    for e in edges:
        G.require(e.u, e.v)
        uf.unite(index[e.u], index[e.v])
    return uf


def is_spanning_connected(edges: Iterable[Edge], G: GroupFamily) -> bool:
    """True iff the edges touch every vertex and form a single component."""
    edges = list(edges)
    if not edges:
        return G.order == 1
    return _union_of(edges, G).components == 1


def is_spanning_tree(edges: Iterable[Edge], G: GroupFamily) -> bool:
    edges = set(edges)
    return len(edges) == G.order - 1 and is_spanning_connected(edges, G)


def components(edges: Iterable[Edge], G: GroupFamily) -> list[frozenset[GroupElement]]:
    """Vertex sets of the non-trivial components, ordered by smallest vertex.

    Vertices untouched by ``edges`` are left out.
    """
    edges = list(edges)
    uf = _union_of(edges, G)
    touched = {x for e in edges for x in (e.u, e.v)}
    groups: dict[int, set[GroupElement]] = {}
    for x in G.elements:
        if x in touched:
            groups.setdefault(uf.find(G.index_of[x]), set()).add(x)
    return sorted((frozenset(c) for c in groups.values()), key=min)


def is_perfect_matching(edges: Iterable[Edge], G: GroupFamily) -> bool:
    """True iff the edges cover every vertex exactly once."""
    edges = list(edges)
    if len(edges) * 2 != G.order:
        return False
    covered: set[GroupElement] = set()
    for e in edges:
        if e.u in covered or e.v in covered:
            return False
        covered.update((e.u, e.v))
    return len(covered) == G.order
