"""Starter validation and expansion into a G-regular 1-factorization."""

from collections import Counter, defaultdict
from typing import Sequence

import structlog

from regfact.core.errors import (
    ArtifactFormatError,
    ConstructionIntegrityError,
    ContractViolationError,
)
from regfact.core.models import Condition, VerificationReport
from regfact.graph.connectivity import is_perfect_matching
from regfact.graph.edges import (
    Edge,
    EdgeSet,
    associated_involution,
    delta,
    format_edge,
    orbit,
    phi,
    translate,
)
from regfact.groups.family import GroupFamily
from regfact.starters.models import Factorization, Starter, StarterBlock

logger = structlog.get_logger()


def validate_starter(starter: Starter) -> VerificationReport:
    """Check the three starter conditions.

    Args:
        starter: Candidate starter

    Returns:
        Report naming every violated condition, block and offending element

    Raises:
        ContractViolationError: If the starter has no blocks
    """
    if not starter.blocks:
        raise ContractViolationError("a starter needs at least one block")
    G = starter.group
    report = VerificationReport(subject=f"starter in {G.label}")

    # (i) differences partition G minus the identity
    report.record(Condition.STARTER_DIFFERENCES)
    owners: dict = defaultdict(list)
    for i, blk in enumerate(starter.blocks):
        for e in blk.edges:
            G.require(e.u, e.v)
            for d in delta(e, G):
                owners[d].append(i)
    missing = [g for g in G.elements[1:] if g not in owners]
    if missing:
        report.fail(
            Condition.STARTER_DIFFERENCES,
            f"{len(missing)} non-identity element(s) are no edge's difference",
            witnesses=[str(g) for g in missing],
        )
    for d in sorted(owners):
        if len(owners[d]) > 1:
            report.fail(
                Condition.STARTER_DIFFERENCES,
                f"difference {d} occurs {len(owners[d])} times",
                block=owners[d][1],
                witnesses=[str(d)],
            )

    for i, blk in enumerate(starter.blocks):
        H = blk.stabilizer
        # (ii) phi(S_i) is a left transversal of H_i
        report.record(Condition.STARTER_TRANSVERSAL)
        reps = [x for e in sorted(blk.edges) for x in phi(e, G)]
        if not G.is_left_transversal(reps, H):
            report.fail(
                Condition.STARTER_TRANSVERSAL,
                f"phi has {len(reps)} element(s) but [G:H] = {G.order // H.order}, "
                "or two of them share a left coset",
                block=i,
                witnesses=[str(x) for x in reps],
            )
        # (iii) H_i contains the involution of every short edge
        report.record(Condition.STARTER_INVOLUTIONS)
        for e in sorted(blk.edges):
            j = associated_involution(e, G)
            if j is not None and j not in H:
                report.fail(
                    Condition.STARTER_INVOLUTIONS,
                    f"short edge {format_edge(e)} has involution {j} outside the stabilizer",
                    block=i,
                    witnesses=[format_edge(e), str(j)],
                )
    return report


def expand_block(block: StarterBlock, G: GroupFamily) -> list[EdgeSet]:
    """Base factor F_i and its translates, one per right coset of H_i.

    F_i*g only depends on the right coset H_i*g, so the smallest element of
    each right coset is used as translation representative.

    Raises:
        ConstructionIntegrityError: If the base factor is not a perfect matching
    """
    base = frozenset(f for e in block.edges for f in orbit(e, block.stabilizer, G))
    if not is_perfect_matching(base, G):
        report = VerificationReport(subject=f"block {block.label or '?'} in {G.label}")
        report.fail(
            Condition.FACTORIZATION_MATCHING,
            f"base factor of block {block.label or '?'} is not a perfect matching",
            witnesses=[format_edge(e) for e in sorted(block.edges)],
        )
        raise ConstructionIntegrityError("malformed starter block", report)
    return [translate(base, g, G) for g in G.right_coset_representatives(block.stabilizer)]


def expand_starter(starter: Starter) -> Factorization:
    """Expand a valid starter into its 1-factorization.

    Raises:
        ConstructionIntegrityError: If the starter is invalid, two factors overlap,
            or the factor count is not 2n-1
    """
    G = starter.group
    report = validate_starter(starter)
    if not report.passed:
        raise ConstructionIntegrityError(f"invalid starter in {G.label}", report)

    factors: list[EdgeSet] = []
    block_of: list[int] = []
    color_of: dict[Edge, int] = {}
    for b, blk in enumerate(starter.blocks):
        for factor in expand_block(blk, G):
            idx = len(factors)
            for e in factor:
                if e in color_of:
                    clash = VerificationReport(subject=f"factorization of {G.label}")
                    clash.fail(
                        Condition.FACTORIZATION_PARTITION,
                        f"edge {format_edge(e)} lies in factors {color_of[e]} and {idx}",
                        block=b,
                        witnesses=[format_edge(e)],
                    )
                    raise ConstructionIntegrityError("overlapping factors", clash)
                color_of[e] = idx
            factors.append(factor)
            block_of.append(b)

    expected = G.order - 1
    if len(factors) != expected or len(color_of) != G.order * expected // 2:
        mismatch = VerificationReport(subject=f"factorization of {G.label}")
        mismatch.fail(
            Condition.FACTORIZATION_COUNT,
            f"{len(factors)} factors covering {len(color_of)} edges, expected {expected}",
        )
        raise ConstructionIntegrityError("factor count mismatch", mismatch)

    logger.debug("starter_expanded", group=G.label, factors=len(factors))
    return Factorization(
        group=G,
        factors=tuple(factors),
        block_of=tuple(block_of),
        starter=starter,
        color_of=color_of,
    )


def factor_of(factorization: Factorization, e: Edge) -> int:
    """Index of the unique factor containing ``e``."""
    factorization.group.require(e.u, e.v)
    return factorization.color_of[e]


def factorization_from_factors(starter: Starter, factors: Sequence[EdgeSet]) -> Factorization:
    """Rebuild a factorization from exported factor lists without trusting them.

    Block ownership is read off the difference set of each factor's smallest edge;
    run :func:`verify_factorization` on the result.

    Raises:
        ArtifactFormatError: If a factor is empty
        ContractViolationError: If no block of the starter owns a factor's difference
    """
    G = starter.group
    owner = starter.difference_owner()
    color_of: dict[Edge, int] = {}
    block_of: list[int] = []
    for idx, factor in enumerate(factors):
        if not factor:
            raise ArtifactFormatError(f"factor {idx} has no edges")
        d = min(delta(min(factor), G))
        if d not in owner:
            raise ContractViolationError(f"no starter block owns difference {d} of factor {idx}")
        block_of.append(owner[d])
        for e in factor:
            color_of.setdefault(e, idx)
    return Factorization(
        group=G,
        factors=tuple(frozenset(f) for f in factors),
        block_of=tuple(block_of),
        starter=starter,
        color_of=color_of,
    )


def verify_factorization(factorization: Factorization) -> VerificationReport:
    """Re-check count, matchings, exact edge partition and G-regularity."""
    G = factorization.group
    factors = factorization.factors
    report = VerificationReport(subject=f"factorization of {G.label}")

    report.record(Condition.FACTORIZATION_COUNT)
    if len(factors) != G.order - 1:
        report.fail(
            Condition.FACTORIZATION_COUNT,
            f"{len(factors)} factors, expected {G.order - 1}",
        )

    report.record(Condition.FACTORIZATION_MATCHING)
    for idx, factor in enumerate(factors):
        if not is_perfect_matching(factor, G):
            report.fail(
                Condition.FACTORIZATION_MATCHING,
                f"factor {idx} is not a perfect matching",
                witnesses=[str(idx)],
            )

    report.record(Condition.FACTORIZATION_PARTITION)
    counts = Counter(e for factor in factors for e in factor)
    repeated = sorted(e for e, c in counts.items() if c > 1)
    if repeated:
        report.fail(
            Condition.FACTORIZATION_PARTITION,
            f"{len(repeated)} edge(s) lie in more than one factor",
            witnesses=[format_edge(e) for e in repeated[:10]],
        )
    total = G.order * (G.order - 1) // 2
    if len(counts) != total:
        report.fail(
            Condition.FACTORIZATION_PARTITION,
            f"factors cover {len(counts)} of the {total} edges",
        )

    report.record(Condition.FACTORIZATION_REGULARITY)
    known = set(factors)
    for g in G.elements:
        for idx, factor in enumerate(factors):
            if translate(factor, g, G) not in known:
                report.fail(
                    Condition.FACTORIZATION_REGULARITY,
                    f"factor {idx} translated by {g} is not a factor",
                    witnesses=[str(idx), str(g)],
                )
                return report
    return report
