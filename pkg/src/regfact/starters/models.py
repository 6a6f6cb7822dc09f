"""Starters and the factorizations they expand into."""

from dataclasses import dataclass, field
from functools import cached_property

from regfact.graph.edges import Edge, EdgeSet, delta
from regfact.groups.family import GroupElement, GroupFamily, Subgroup


@dataclass(frozen=True)
class StarterBlock:
    """One edge set S_i with its stabilizer H_i."""

    edges: EdgeSet
    stabilizer: Subgroup
    label: str = ""

    def key(self) -> tuple[EdgeSet, frozenset[GroupElement]]:
        """Identity of the block ignoring its label and generator choice."""
        return (self.edges, self.stabilizer.element_set)


@dataclass(frozen=True)
class Starter:
    """Blocks whose orbits make up a G-regular 1-factorization."""

    group: GroupFamily
    blocks: tuple[StarterBlock, ...]

    def factor_count(self, block: int) -> int:
        """t_i = [G : H_i]."""
        return self.group.order // self.blocks[block].stabilizer.order

    def difference_owner(self) -> dict[GroupElement, int]:
        """Block index owning each difference; the first owner wins on duplicates."""
        owner: dict[GroupElement, int] = {}
        for i, blk in enumerate(self.blocks):
            for e in blk.edges:
                for d in delta(e, self.group):
                    owner.setdefault(d, i)
        return owner

    def key(self) -> frozenset[tuple[EdgeSet, frozenset[GroupElement]]]:
        """Block-order independent identity, used to compare starters."""
        return frozenset(blk.key() for blk in self.blocks)


@dataclass(frozen=True)
class Factorization:
    """The 2n-1 one-factors in (block, coset representative) order."""

    group: GroupFamily
    factors: tuple[EdgeSet, ...]
    block_of: tuple[int, ...]
    starter: Starter
    color_of: dict[Edge, int] = field(compare=False, repr=False, hash=False)

    def factors_of_block(self, block: int) -> list[int]:
        return [i for i, b in enumerate(self.block_of) if b == block]

    @cached_property
    def fixed_factors(self) -> tuple[int, ...]:
        """Indices of factors stabilized by the whole group."""
        return tuple(
            i
            for i, b in enumerate(self.block_of)
            if self.starter.blocks[b].stabilizer.order == self.group.order
        )
