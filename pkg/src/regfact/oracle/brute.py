"""Brute-force ground truth for small groups.

Nothing here reuses the factor colouring of the starter engine: group axioms
are checked on a raw multiplication table, partitions are recounted edge by
edge, and starters are found by plain backtracking over difference classes.
"""

from collections import Counter
from typing import Iterable, Optional

import structlog

from regfact.core.errors import ContractViolationError
from regfact.core.models import Condition, VerificationReport
from regfact.graph.edges import (
    Edge,
    EdgeSet,
    act,
    all_edges,
    associated_involution,
    delta,
    phi,
    translate,
)
from regfact.groups.family import FamilyKind, GroupElement, GroupFamily, Subgroup
from regfact.oracle.models import PartitionRecount, SearchBudget, SearchResult
from regfact.starters.engine import validate_starter
from regfact.starters.models import Starter, StarterBlock

logger = structlog.get_logger()

AXIOM_CHECK_LIMIT = 64


def recount_partition(trees: Iterable[Iterable[Edge]], G: GroupFamily) -> PartitionRecount:
    """Count how often each edge of K_2n occurs across ``trees``."""
    trees = [list(t) for t in trees]
    counts: Counter[Edge] = Counter({e: 0 for e in all_edges(G)})
    for tree in trees:
        counts.update(tree)
    return PartitionRecount(
        subject=f"edge recount over {len(trees)} tree(s) in {G.label}",
        counts=counts,
        duplicated=sorted(e for e, c in counts.items() if c > 1),
        missing=sorted(e for e, c in counts.items() if c == 0),
    )


def exhaustive_group_axiom_check(
    G: GroupFamily, limit: int = AXIOM_CHECK_LIMIT
) -> VerificationReport:
    """Check the group laws over every triple, plus the family's defining relations.

    Raises:
        ContractViolationError: If |G| exceeds ``limit``
    """
    if G.order > limit:
        raise ContractViolationError(
            f"axiom exhaustion is limited to |G| <= {limit}, {G.label} has order {G.order}"
        )
    elements = G.elements
    size = len(elements)
    index = G.index_of
    report = VerificationReport(subject=f"group axioms of {G.label} ({size ** 3} triples)")

    report.record(Condition.GROUP_CLOSURE)
    table: list[list[int]] = []
    for x in elements:
        row: list[int] = []
        for y in elements:
            z = G.mul(x, y)
            if z not in index:
                report.fail(
                    Condition.GROUP_CLOSURE,
                    f"{x}*{y} leaves the group",
                    witnesses=[str(x), str(y), repr(z)],
                )
                return report
            row.append(index[z])
        table.append(row)

    e = index[G.identity]
    report.record(Condition.GROUP_IDENTITY)
    for i, x in enumerate(elements):
        if table[e][i] != i or table[i][e] != i:
            report.fail(Condition.GROUP_IDENTITY, f"1 is not neutral for {x}", witnesses=[str(x)])

    report.record(Condition.GROUP_INVERSE)
    for i, x in enumerate(elements):
        y = index[G.inv(x)]
        if table[i][y] != e or table[y][i] != e:
            report.fail(
                Condition.GROUP_INVERSE,
                f"inverse of {x} is wrong",
                witnesses=[str(x), str(elements[y])],
            )

    report.record(Condition.GROUP_ASSOCIATIVITY)
    bad = 0
    for i in range(size):
        row_i = table[i]
        for j in range(size):
            ij = row_i[j]
            row_j = table[j]
            for k in range(size):
                if table[ij][k] != row_i[row_j[k]]:
                    bad += 1
                    if bad <= 5:
                        report.fail(
                            Condition.GROUP_ASSOCIATIVITY,
                            "(xy)z != x(yz)",
                            witnesses=[str(elements[i]), str(elements[j]), str(elements[k])],
                        )

    # right translation by g must permute the vertices without fixed points
    report.record(Condition.GROUP_REGULAR_ACTION)
    for j, g in enumerate(elements):
        image = [table[i][j] for i in range(size)]
        if len(set(image)) != size or (j != e and any(image[i] == i for i in range(size))):
            report.fail(
                Condition.GROUP_REGULAR_ACTION,
                f"right translation by {g} is not a fixed-point-free permutation",
                witnesses=[str(g)],
            )

    report.record(Condition.GROUP_INVOLUTIONS)
    found = [x for i, x in enumerate(elements) if i != e and table[i][i] == e]
    expected = _expected_involutions(G)
    if len(found) != expected:
        report.fail(
            Condition.GROUP_INVOLUTIONS,
            f"{len(found)} involution(s), expected {expected}",
            witnesses=[str(x) for x in found],
        )

    report.merge(_check_relations(G))
    logger.debug("axioms_checked", group=G.label, triples=size**3, passed=report.passed)
    return report


def _expected_involutions(G: GroupFamily) -> int:
    if G.kind is FamilyKind.DICYCLIC:
        return 1
    if G.kind is FamilyKind.SEMIDIHEDRAL:
        return G.cyclic_order // 2 + 1
    return 3


def _check_relations(G: GroupFamily) -> VerificationReport:
    report = VerificationReport(subject=f"defining relations of {G.label}")
    report.record(Condition.GROUP_RELATIONS)
    m = G.cyclic_order
    a, b, one = G.a(1), G.b, G.identity

    def require(lhs: GroupElement, rhs: GroupElement, text: str) -> None:
        if lhs != rhs:
            report.fail(Condition.GROUP_RELATIONS, f"{text} fails: got {lhs}", witnesses=[text])

    if G.subgroup(a).order != m:
        report.fail(Condition.GROUP_RELATIONS, f"a does not have order {m}")
    require(G.power(a, m), one, f"a^{m} = 1")

    conj = G.mul(G.mul(G.inv(b), a), b)
    if G.kind is FamilyKind.DICYCLIC:
        require(G.mul(b, b), G.a(G.param), f"b^2 = a^{G.param}")
        require(conj, G.inv(a), "b^-1 a b = a^-1")
    elif G.kind is FamilyKind.ABELIAN:
        require(G.mul(b, b), one, "b^2 = 1")
        require(G.mul(a, b), G.mul(b, a), "ab = ba")
    else:
        exponent = m // 2 - 1 if G.kind is FamilyKind.SEMIDIHEDRAL else m // 2 + 1
        require(G.mul(b, b), one, "b^2 = 1")
        require(G.mul(G.mul(b, a), b), G.a(exponent), f"bab = a^{exponent}")
    return report


class _StarterSearch:
    """Backtracking over difference classes.

    A starter is grown one block at a time. Each block starts with the edge
    [1, d] for the least uncovered difference d; any block can be translated
    to that position while conjugating its stabilizer, which leaves the
    factorization unchanged. Further edges come from classes of higher index
    so no block is produced twice in a different edge order.
    """

    def __init__(self, G: GroupFamily, budget: SearchBudget) -> None:
        self.G = G
        self.budget = budget
        self.nodes = 0
        self.complete = True
        self.found: list[Starter] = []

        self.classes: list[frozenset[GroupElement]] = sorted(
            {delta(e, G) for e in all_edges(G)}, key=min
        )
        position = {c: i for i, c in enumerate(self.classes)}
        self.class_edges: list[list[Edge]] = [[] for _ in self.classes]
        for e in all_edges(G):
            self.class_edges[position[delta(e, G)]].append(e)

        self.subgroups = _all_subgroups(G)
        self.left_cosets: list[dict[GroupElement, frozenset[GroupElement]]] = [
            {x: frozenset(G.mul(x, h) for h in H) for x in G.elements} for H in self.subgroups
        ]

    def run(self) -> SearchResult:
        self._extend_starter(frozenset(), [], 0)
        return SearchResult(starters=self.found, complete=self.complete, nodes=self.nodes)

    def _spend(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            self.complete = False
        return self.complete

    def _extend_starter(
        self, covered: frozenset[int], blocks: list[StarterBlock], factors: int
    ) -> None:
        G = self.G
        if len(covered) == len(self.classes):
            if factors == G.order - 1:
                self._emit(blocks)
            return
        first_class = min(i for i in range(len(self.classes)) if i not in covered)
        first = Edge.of(G.identity, min(self.classes[first_class]))

        for h, H in enumerate(self.subgroups):
            if not self.complete:
                return
            index = G.order // H.order
            if factors + index > G.order - 1:
                continue
            cosets = self._admit(first, h, frozenset())
            if cosets is None:
                continue
            self._grow_block(
                h,
                [first],
                {first.u, first.v},
                cosets,
                [first_class],
                covered,
                blocks,
                factors,
            )

    def _grow_block(
        self,
        h: int,
        edges: list[Edge],
        used: set[GroupElement],
        cosets: frozenset[frozenset[GroupElement]],
        block_classes: list[int],
        covered: frozenset[int],
        blocks: list[StarterBlock],
        factors: int,
    ) -> None:
        if not self._spend():
            return
        G = self.G
        H = self.subgroups[h]
        index = G.order // H.order
        if len(cosets) == index:
            block = StarterBlock(
                edges=frozenset(edges), stabilizer=H, label=f"S_{len(blocks)}"
            )
            blocks.append(block)
            self._extend_starter(covered | frozenset(block_classes), blocks, factors + index)
            blocks.pop()
            return

        for c in range(block_classes[-1] + 1, len(self.classes)):
            if c in covered:
                continue
            for e in self.class_edges[c]:
                if e.u in used or e.v in used:
                    continue
                grown = self._admit(e, h, cosets)
                if grown is None or len(grown) > index:
                    continue
                edges.append(e)
                block_classes.append(c)
                self._grow_block(
                    h, edges, used | {e.u, e.v}, grown, block_classes, covered, blocks, factors
                )
                block_classes.pop()
                edges.pop()
                if not self.complete:
                    return

    def _admit(
        self, e: Edge, h: int, cosets: frozenset[frozenset[GroupElement]]
    ) -> Optional[frozenset[frozenset[GroupElement]]]:
        """Cosets after adding ``e``, or None if e breaks the transversal or involution rule."""
        H = self.subgroups[h]
        j = associated_involution(e, self.G)
        if j is not None and j not in H:
            return None
        new = [self.left_cosets[h][x] for x in phi(e, self.G)]
        if len(set(new)) != len(new) or any(c in cosets for c in new):
            return None
        return cosets | frozenset(new)

    def _emit(self, blocks: list[StarterBlock]) -> None:
        starter = Starter(self.G, tuple(blocks))
        if validate_starter(starter).passed:
            self.found.append(starter)


def _all_subgroups(G: GroupFamily) -> list[Subgroup]:
    """Every subgroup, each generated by at most two elements (enough for these families)."""
    seen: dict[frozenset[GroupElement], Subgroup] = {}
    elements = G.elements
    for i, x in enumerate(elements):
        for y in elements[i:]:
            H = G.subgroup(x, y)
            seen.setdefault(H.element_set, H)
    return sorted(seen.values(), key=lambda H: (-H.order, H.elements))


def exhaustive_starter_search(
    G: GroupFamily, budget: Optional[SearchBudget] = None
) -> SearchResult:
    """Find starters of G by backtracking; stops early when the node budget runs out.

    Raises:
        ContractViolationError: If |G| exceeds ``budget.max_group_order``
    """
    budget = budget or SearchBudget()
    if G.order > budget.max_group_order:
        raise ContractViolationError(
            f"starter search is limited to |G| <= {budget.max_group_order}, "
            f"{G.label} has order {G.order}"
        )
    result = _StarterSearch(G, budget).run()
    logger.info(
        "search_finished",
        group=G.label,
        found=len(result.starters),
        nodes=result.nodes,
        complete=result.complete,
    )
    return result


def starter_in(result: SearchResult, starter: Starter) -> bool:
    """Whether some result expands to the same 1-factorization as ``starter``.

    The search only keeps blocks translated onto [1, d], so ``starter`` itself
    may be absent even when its factorization was found.
    """
    target = _orbit_factors(starter)
    return any(_orbit_factors(s) == target for s in result.starters)


def _orbit_factors(starter: Starter) -> frozenset[EdgeSet]:
    G = starter.group
    factors: set[EdgeSet] = set()
    for blk in starter.blocks:
        base = frozenset(act(e, h, G) for e in blk.edges for h in blk.stabilizer)
        factors.update(translate(base, g, G) for g in G.elements)
    return frozenset(factors)

