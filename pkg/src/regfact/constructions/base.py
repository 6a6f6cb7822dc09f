"""Shared plumbing for the family constructions."""

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import structlog

from regfact.core.errors import ConstructionIntegrityError, UnsupportedParameterError
from regfact.graph.edges import Edge, EdgeSet
from regfact.groups.family import FamilyKind, GroupElement, GroupFamily, Subgroup
from regfact.rainbow.lemma import assemble, check_pieces, standard_transversal
from regfact.rainbow.models import LemmaOneInput, RainbowTreeSet
from regfact.starters.engine import expand_starter
from regfact.starters.models import Factorization, Starter, StarterBlock

logger = structlog.get_logger()


@dataclass(frozen=True)
class Construction:
    """A certified construction: starter, base graph, factorization and trees."""

    starter: Starter
    lemma_input: LemmaOneInput
    factorization: Factorization
    trees: RainbowTreeSet

    @property
    def group(self) -> GroupFamily:
        return self.starter.group


Builder = Callable[[int], Construction]


class EdgeBuilder:
    """Shorthand for writing edges the way the constructions list them."""

    def __init__(self, group: GroupFamily) -> None:
        self.group = group

    def a(self, k: int = 1) -> GroupElement:
        return self.group.a(k)

    def ba(self, k: int = 0) -> GroupElement:
        return self.group.ba(k)

    def edge(self, x: GroupElement, y: GroupElement) -> Edge:
        return Edge.of(x, y)

    def block(self, label: str, edges: Iterable[Edge], *gens: GroupElement) -> StarterBlock:
        """Starter block whose stabilizer is generated by ``gens`` (the whole group if none)."""
        stabilizer: Subgroup = self.group.subgroup(*gens) if gens else self.group.whole()
        return StarterBlock(edges=frozenset(edges), stabilizer=stabilizer, label=label)


def finalize(
    starter: Starter,
    pieces: dict[str, Iterable[Edge]],
    e1: Edge,
    e2: Edge,
) -> Construction:
    """Expand the starter, assemble the trees and certify both.

    Raises:
        ConstructionIntegrityError: If any stage fails its verification
    """
    G = starter.group
    frozen_pieces: dict[str, EdgeSet] = {
        name: frozenset(edges) for name, edges in pieces.items() if edges
    }
    base_graph: EdgeSet = frozenset().union(*frozen_pieces.values())
    lemma_input = LemmaOneInput(
        group=G,
        base_graph=base_graph,
        e1=e1,
        e2=e2,
        cyclic_subgroup=G.cyclic_subgroup(),
        central_involution=G.central_involution(),
        transversal=standard_transversal(G),
        pieces=frozen_pieces,
    )
    overlap = check_pieces(lemma_input)
    if not overlap.passed:
        raise ConstructionIntegrityError(f"pieces of R for {G.label} overlap", overlap)
    factorization = expand_starter(starter)
    trees = assemble(lemma_input, factorization)
    logger.info(
        "construction_certified",
        group=G.label,
        order=G.order,
        factors=len(factorization.factors),
        trees=len(trees.trees),
    )
    return Construction(
        starter=starter,
        lemma_input=lemma_input,
        factorization=factorization,
        trees=trees,
    )


class ConstructionRegistry:
    """Routes a family name to the builder implementing it."""

    def __init__(self) -> None:
        self._builders: dict[FamilyKind, Builder] = {}

    def register(self, kind: FamilyKind, builder: Builder) -> None:
        """Register/overwrite the builder for a family."""
        self._builders[kind] = builder

    def get(self, kind: FamilyKind | str) -> Optional[Builder]:
        try:
            return self._builders.get(FamilyKind(kind))
        except ValueError:
            return None

    def list_families(self) -> list[str]:
        return sorted(k.value for k in self._builders)

    def build(self, kind: FamilyKind | str, param: int) -> Construction:
        builder = self.get(kind)
        if builder is None:
            raise UnsupportedParameterError(f"no construction registered for {kind!r}")
        return builder(param)
