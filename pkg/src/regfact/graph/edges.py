"""Edges of K_2n over group vertices and the maps defined on them."""

from dataclasses import dataclass
from typing import Iterable, Optional

from regfact.core.errors import ArtifactFormatError, ContractViolationError
from regfact.groups.family import GroupElement, GroupFamily, Subgroup, format_element


@dataclass(frozen=True, order=True, slots=True)
class Edge:
    """Unordered vertex pair stored with ``u < v``. Build it with :meth:`Edge.of`."""

    u: GroupElement
    v: GroupElement

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ContractViolationError(f"loop at {format_element(self.u)} is not an edge")
        if self.v < self.u:
            raise ContractViolationError("Edge endpoints must be ordered; use Edge.of(x, y)")

    @classmethod
    def of(cls, x: GroupElement, y: GroupElement) -> "Edge":
        return cls(x, y) if x < y else cls(y, x)

    def __str__(self) -> str:
        return format_edge(self)


EdgeSet = frozenset[Edge]


def format_edge(e: Edge) -> str:
    return f"[{format_element(e.u)},{format_element(e.v)}]"


def parse_edge(text: str, G: GroupFamily) -> Edge:
    """Parse ``[u,v]`` into a canonical edge of K_2n over G."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ArtifactFormatError(f"edge must look like [u,v], got {text!r}")
    parts = body[1:-1].split(",")
    if len(parts) != 2:
        raise ArtifactFormatError(f"edge must have two endpoints, got {text!r}")
    x, y = (G.parse_element(p) for p in parts)
    if x == y:
        raise ArtifactFormatError(f"edge {text!r} is a loop")
    return Edge.of(x, y)


def delta(e: Edge, G: GroupFamily) -> frozenset[GroupElement]:
    """Difference set {x y^-1, y x^-1}; a singleton exactly when the edge is short."""
    return frozenset((G.mul(e.u, G.inv(e.v)), G.mul(e.v, G.inv(e.u))))


def is_short(e: Edge, G: GroupFamily) -> bool:
    return len(delta(e, G)) == 1


def associated_involution(e: Edge, G: GroupFamily) -> Optional[GroupElement]:
    """The involution g with [x,y]*g = [x,y], or None for a long edge."""
    if not is_short(e, G):
        return None
    return G.mul(G.inv(e.u), e.v)


def phi(e: Edge, G: GroupFamily) -> tuple[GroupElement, ...]:
    """Both endpoints of a long edge; the smaller endpoint of a short one."""
    if is_short(e, G):
        return (e.u,)
    return (e.u, e.v)


def act(e: Edge, g: GroupElement, G: GroupFamily) -> Edge:
    """Right translation [x,y]*g = [xg, yg]."""
    return Edge.of(G.mul(e.u, g), G.mul(e.v, g))


def translate(edges: Iterable[Edge], g: GroupElement, G: GroupFamily) -> EdgeSet:
    return frozenset(act(e, g, G) for e in edges)


def orbit(e: Edge, H: Subgroup, G: GroupFamily) -> EdgeSet:
    return frozenset(act(e, h, G) for h in H.elements)


def all_edges(G: GroupFamily) -> list[Edge]:
    """Every edge of K_2n in canonical order."""
    elements = G.elements
    return [Edge(x, y) for i, x in enumerate(elements) for y in elements[i + 1 :]]


def difference_multiset(edges: Iterable[Edge], G: GroupFamily) -> list[GroupElement]:
    """Concatenated difference sets; repeated differences stay repeated."""
    out: list[GroupElement] = []
    for e in edges:
        out.extend(sorted(delta(e, G)))
    return out


def format_edges(edges: Iterable[Edge]) -> list[str]:
    return [format_edge(e) for e in sorted(edges)]
