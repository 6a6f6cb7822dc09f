"""Checks on (R, e1, e2), assembly of the tree set, and independent certification."""

from collections import Counter, defaultdict
from typing import Iterable, Mapping, Sequence

import structlog

from regfact.core.errors import ConstructionIntegrityError
from regfact.core.models import Condition, VerificationReport
from regfact.graph.connectivity import is_spanning_connected
from regfact.graph.edges import Edge, EdgeSet, all_edges, delta, format_edge, orbit, translate
from regfact.groups.family import GroupElement, GroupFamily, Subgroup
from regfact.rainbow.models import LemmaOneInput, RainbowTreeSet
from regfact.starters.models import Factorization, Starter

logger = structlog.get_logger()


def partition_by_block(base_graph: Iterable[Edge], starter: Starter) -> dict[int, list[Edge]]:
    """Split R into the R_i by the block owning each edge's differences."""
    G = starter.group
    owner = starter.difference_owner()
    parts: dict[int, list[Edge]] = defaultdict(list)
    for e in sorted(base_graph):
        parts[owner[min(delta(e, G))]].append(e)
    return dict(parts)


def bridge_block(starter: Starter, j: GroupElement) -> int:
    """Index of the block whose only difference is j."""
    return starter.difference_owner()[j]


def check_lemma_input(inp: LemmaOneInput) -> VerificationReport:
    """H cyclic of index two, j its unique involution, transversal of the {1, j}-cosets."""
    G = inp.group
    H = inp.cyclic_subgroup
    j = inp.central_involution
    report = VerificationReport(subject=f"lemma input for {G.label}")
    report.record(Condition.LEMMA_INPUT)

    if H.order * 2 != G.order or not any(G.subgroup(h).order == H.order for h in H):
        report.fail(Condition.LEMMA_INPUT, "H is not a cyclic subgroup of index two")
    involutions = [h for h in H if h != G.identity and G.mul(h, h) == G.identity]
    if involutions != [j]:
        report.fail(
            Condition.LEMMA_INPUT,
            f"{j} is not the unique involution of H",
            witnesses=[str(h) for h in involutions],
        )
    covered: set[GroupElement] = set()
    for h in inp.transversal:
        pair = {h, G.mul(h, j)}
        if h not in H or not covered.isdisjoint(pair):
            report.fail(
                Condition.LEMMA_INPUT,
                f"transversal element {h} repeats a coset of {{1, {j}}} or lies outside H",
                witnesses=[str(h)],
            )
        covered |= pair
    if len(covered) != H.order:
        report.fail(Condition.LEMMA_INPUT, "transversal misses a coset of {1, j} in H")
    return report


def check_condition_1(
    parts: Mapping[int, Sequence[Edge]],
    factorization: Factorization,
    exempt_block: int,
) -> VerificationReport:
    """Each R_i hits the t_i factors of block i bijectively and realises all of dS_i.

    The block of the bridge edges is exempt and R must stay out of it.
    """
    G = factorization.group
    starter = factorization.starter
    report = VerificationReport(subject=f"base graph factors in {G.label}")
    report.record(Condition.LEMMA_FACTORS)

    for i, blk in enumerate(starter.blocks):
        edges = sorted(parts.get(i, ()))
        if i == exempt_block:
            if edges:
                report.fail(
                    Condition.LEMMA_FACTORS,
                    "R uses the factor reserved for the bridge edges",
                    block=i,
                    witnesses=[format_edge(e) for e in edges],
                )
            continue

        expected = set(factorization.factors_of_block(i))
        colors = Counter(factorization.color_of[e] for e in edges)
        uncovered = sorted(expected - set(colors))
        if uncovered:
            report.fail(
                Condition.LEMMA_FACTORS,
                f"{len(uncovered)} factor(s) of block {blk.label or i} have no edge in R",
                block=i,
                witnesses=[str(c) for c in uncovered],
            )
        repeated = sorted(c for c, k in colors.items() if k > 1)
        if repeated:
            report.fail(
                Condition.LEMMA_FACTORS,
                "factor hit by more than one edge of R",
                block=i,
                witnesses=[str(c) for c in repeated],
            )
        wanted = {d for e in blk.edges for d in delta(e, G)}
        seen = {d for e in edges for d in delta(e, G)}
        if seen != wanted:
            report.fail(
                Condition.LEMMA_FACTORS,
                "differences of R_i differ from those of S_i",
                block=i,
                witnesses=[str(d) for d in sorted(wanted ^ seen)],
            )
    return report


def check_condition_2(
    parts: Mapping[int, Sequence[Edge]], H: Subgroup, G: GroupFamily
) -> VerificationReport:
    """Long edges of R_i pair up across H-orbits; short edges are alone with their difference."""
    report = VerificationReport(subject=f"base graph pairing in {G.label}")
    report.record(Condition.LEMMA_PAIRING)

    for i, edges in sorted(parts.items()):
        diffs = {e: delta(e, G) for e in edges}
        for pos, e in enumerate(edges):
            partners = [f for q, f in enumerate(edges) if q != pos and diffs[f] == diffs[e]]
            if len(diffs[e]) == 1:
                if partners:
                    report.fail(
                        Condition.LEMMA_PAIRING,
                        f"short edge {format_edge(e)} shares its difference inside R_i",
                        block=i,
                        witnesses=[format_edge(f) for f in [e, *partners]],
                    )
                continue
            e_orbit = orbit(e, H, G)
            outside = [f for f in partners if f not in e_orbit]
            if len(outside) != 1:
                report.fail(
                    Condition.LEMMA_PAIRING,
                    f"long edge {format_edge(e)} has {len(outside)} partner(s) in other H-orbits",
                    block=i,
                    witnesses=[format_edge(f) for f in [e, *partners]],
                )
    return report


def check_condition_3(
    base_graph: EdgeSet, e1: Edge, e2: Edge, H: Subgroup, G: GroupFamily
) -> VerificationReport:
    """Bridges in distinct H-orbits, and R plus either bridge spanning and connected."""
    report = VerificationReport(subject=f"bridge edges in {G.label}")
    report.record(Condition.LEMMA_BRIDGES)

    if delta(e1, G) != delta(e2, G) or len(delta(e1, G)) != 1:
        report.fail(
            Condition.LEMMA_BRIDGES,
            "bridge edges must be short with the same difference",
            witnesses=[format_edge(e1), format_edge(e2)],
        )
    if not orbit(e1, H, G).isdisjoint(orbit(e2, H, G)):
        report.fail(
            Condition.LEMMA_BRIDGES,
            "bridge edges lie in the same H-orbit",
            witnesses=[format_edge(e1), format_edge(e2)],
        )
    for name, bridge in (("e1", e1), ("e2", e2)):
        if not is_spanning_connected(base_graph | {bridge}, G):
            report.fail(
                Condition.LEMMA_BRIDGES,
                f"R with {name} is not spanning and connected",
                witnesses=[format_edge(bridge)],
            )
    return report


def check_lemma_conditions(inp: LemmaOneInput, factorization: Factorization) -> VerificationReport:
    """Run the input check and the three conditions, merged into one report."""
    G = inp.group
    report = VerificationReport(subject=f"base graph of {G.label}")
    report.merge(check_lemma_input(inp))
    parts = partition_by_block(inp.base_graph, factorization.starter)
    exempt = bridge_block(factorization.starter, inp.central_involution)
    report.merge(check_condition_1(parts, factorization, exempt))
    report.merge(check_condition_2(parts, inp.cyclic_subgroup, G))
    report.merge(
        check_condition_3(inp.base_graph, inp.e1, inp.e2, inp.cyclic_subgroup, G)
    )
    return report


def assemble(inp: LemmaOneInput, factorization: Factorization) -> RainbowTreeSet:
    """Build T1 = R + e1 and T2 = R*j + e2 and translate both by the transversal.

    Raises:
        ConstructionIntegrityError: If a condition fails or the result does not certify
    """
    G = inp.group
    report = check_lemma_conditions(inp, factorization)
    if not report.passed:
        raise ConstructionIntegrityError(f"base graph of {G.label} fails its conditions", report)

    t1 = inp.base_graph | {inp.e1}
    t2 = translate(inp.base_graph, inp.central_involution, G) | {inp.e2}
    trees = tuple(translate(t1, h, G) for h in inp.transversal) + tuple(
        translate(t2, h, G) for h in inp.transversal
    )
    result = RainbowTreeSet(
        group=G, trees=trees, t1=t1, t2=t2, transversal=tuple(inp.transversal)
    )

    certificate = certify(result, factorization)
    if not certificate.passed:
        raise ConstructionIntegrityError(f"assembled trees of {G.label} do not certify", certificate)
    logger.debug("trees_assembled", group=G.label, trees=len(trees))
    return result


def certify(tree_set: RainbowTreeSet, factorization: Factorization) -> VerificationReport:
    """Re-check a tree set from first principles.

    Colors are recomputed from the factor lists; ``color_of`` is not consulted.
    """
    G = factorization.group
    n = G.order // 2
    report = VerificationReport(subject=f"rainbow trees of {G.label}")

    colors: dict[Edge, int] = {}
    for idx, factor in enumerate(factorization.factors):
        for e in factor:
            colors[e] = idx
    palette = list(range(G.order - 1))

    report.record(Condition.TREES_COUNT)
    if len(tree_set.trees) != n:
        report.fail(Condition.TREES_COUNT, f"{len(tree_set.trees)} trees, expected {n}")

    for t, tree in enumerate(tree_set.trees):
        report.record(Condition.TREES_SIZE)
        if len(tree) != G.order - 1:
            report.fail(
                Condition.TREES_SIZE, f"{len(tree)} edges, expected {G.order - 1}", tree=t
            )
        report.record(Condition.TREES_SPANNING)
        if not is_spanning_connected(tree, G):
            report.fail(Condition.TREES_SPANNING, "not spanning and connected", tree=t)
        report.record(Condition.TREES_RAINBOW)
        seen = sorted(colors.get(e, -1) for e in tree)
        if seen != palette:
            counts = Counter(seen)
            off = sorted({c for c in palette if counts[c] != 1} | {c for c in counts if c < 0})
            report.fail(
                Condition.TREES_RAINBOW,
                "factors are not met exactly once",
                tree=t,
                witnesses=[str(c) for c in off],
            )

    report.record(Condition.TREES_PARTITION)
    counts = Counter(e for tree in tree_set.trees for e in tree)
    repeated = sorted(e for e, c in counts.items() if c > 1)
    missing = [e for e in all_edges(G) if counts[e] == 0]
    if repeated:
        report.fail(
            Condition.TREES_PARTITION,
            f"{len(repeated)} edge(s) lie in more than one tree",
            witnesses=[format_edge(e) for e in repeated[:10]],
        )
    if missing:
        report.fail(
            Condition.TREES_PARTITION,
            f"{len(missing)} edge(s) lie in no tree",
            witnesses=[format_edge(e) for e in missing[:10]],
        )
    return report


def standard_transversal(G: GroupFamily) -> tuple[GroupElement, ...]:
    """a^0 .. a^(n/2 - 1), one element from each {1, j}-coset of <a>."""
    return tuple(G.a(i) for i in range(G.order // 4))


def check_pieces(inp: LemmaOneInput) -> VerificationReport:
    """The named pieces of R are pairwise disjoint and together make up R."""
    G = inp.group
    report = VerificationReport(subject=f"pieces of R in {G.label}")
    report.record(Condition.LEMMA_PIECES)
    counts = Counter(e for edges in inp.pieces.values() for e in edges)
    shared = sorted(e for e, c in counts.items() if c > 1)
    if shared:
        report.fail(
            Condition.LEMMA_PIECES,
            f"{len(shared)} edge(s) lie in more than one piece",
            witnesses=[format_edge(e) for e in shared[:10]],
        )
    if inp.pieces and set(counts) != inp.base_graph:
        stray = sorted(set(counts) ^ inp.base_graph)
        report.fail(
            Condition.LEMMA_PIECES,
            f"pieces and R differ in {len(stray)} edge(s)",
            witnesses=[format_edge(e) for e in stray[:10]],
        )
    return report


def check_provenance(
    tree_set: RainbowTreeSet, inp: LemmaOneInput | None = None
) -> VerificationReport:
    """Trees are T1*h then T2*h over the standard transversal.

    With the base graph at hand, T1 must be R + e1 and T2 must be R*j + e2.
    """
    G = tree_set.group
    report = VerificationReport(subject=f"provenance of the trees of {G.label}")
    report.record(Condition.TREES_PROVENANCE)

    if tuple(tree_set.transversal) != standard_transversal(G):
        report.fail(
            Condition.TREES_PROVENANCE,
            "transversal is not a^0 .. a^(n/2 - 1)",
            witnesses=[str(h) for h in tree_set.transversal],
        )
    expected = [translate(tree_set.t1, h, G) for h in tree_set.transversal]
    expected += [translate(tree_set.t2, h, G) for h in tree_set.transversal]
    for t, tree in enumerate(tree_set.trees):
        if t >= len(expected) or tree != expected[t]:
            report.fail(
                Condition.TREES_PROVENANCE,
                "tree is not the matching translate of T1 or T2",
                tree=t,
            )
    if len(expected) > len(tree_set.trees):
        report.fail(
            Condition.TREES_PROVENANCE,
            f"{len(expected) - len(tree_set.trees)} translate(s) of T1 or T2 are missing",
        )

    if inp is not None:
        if tree_set.t1 != inp.base_graph | {inp.e1}:
            report.fail(Condition.TREES_PROVENANCE, "T1 is not R + e1")
        shifted = translate(inp.base_graph, inp.central_involution, G)
        if tree_set.t2 != shifted | {inp.e2}:
            report.fail(Condition.TREES_PROVENANCE, "T2 is not R*j + e2")
    return report
