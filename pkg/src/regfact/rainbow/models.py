"""Inputs and outputs of the rainbow tree assembly."""

from dataclasses import dataclass, field

from regfact.graph.edges import Edge, EdgeSet
from regfact.groups.family import GroupElement, GroupFamily, Subgroup


@dataclass(frozen=True)
class LemmaOneInput:
    """Base graph R, bridge edges e1 and e2, and the data used to translate them.

    ``pieces`` keeps the named parts of R (T', T'', R_1 .. R_4) for export and figures.
    """

    group: GroupFamily
    base_graph: EdgeSet
    e1: Edge
    e2: Edge
    cyclic_subgroup: Subgroup
    central_involution: GroupElement
    transversal: tuple[GroupElement, ...]
    pieces: dict[str, EdgeSet] = field(default_factory=dict, compare=False, hash=False)


@dataclass(frozen=True)
class RainbowTreeSet:
    """n spanning trees, T1*h and T2*h for every transversal element h."""

    group: GroupFamily
    trees: tuple[EdgeSet, ...]
    t1: EdgeSet
    t2: EdgeSet
    transversal: tuple[GroupElement, ...]
