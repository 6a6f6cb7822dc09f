"""Re-verification of imported artifacts from first principles."""

from typing import Optional

import structlog

from regfact.core.models import Condition, VerificationReport
from regfact.graph.edges import format_edge, parse_edge
from regfact.groups.family import GroupFamily
from regfact.io.artifacts import (
    ArtifactDocument,
    FactorizationDoc,
    edges_from_doc,
    group_from_doc,
    starter_from_doc,
)
from regfact.oracle.brute import recount_partition
from regfact.rainbow.lemma import (
    certify,
    check_lemma_conditions,
    check_pieces,
    check_provenance,
    standard_transversal,
)
from regfact.rainbow.models import LemmaOneInput, RainbowTreeSet
from regfact.starters.engine import (
    expand_starter,
    factorization_from_factors,
    validate_starter,
    verify_factorization,
)
from regfact.starters.models import Factorization, Starter

logger = structlog.get_logger()


def verify_document(doc: ArtifactDocument, max_order: Optional[int] = None) -> VerificationReport:
    """Run every check the document's sections allow.

    A starter-only document gets the three starter conditions. A factorization
    is re-checked, compared against the starter's expansion, and its ``block_of``
    against the block owning each factor. Trees are certified against the
    factorization, recounted by the oracle, and matched against ``t1``, ``t2``
    and the transversal. A base graph is re-checked against its conditions and
    its named pieces must split it exactly.

    Raises:
        UnsupportedParameterError: If the group is outside its family's range or ``max_order``
        ArtifactFormatError: If an element or edge cannot be parsed
    """
    G = group_from_doc(doc.group, max_order)
    starter = starter_from_doc(doc.starter, G)
    report = VerificationReport(subject=f"artifact for {G.label}")
    report.merge(validate_starter(starter))
    if not report.passed:
        _log(G.label, report)
        return report

    factorization: Optional[Factorization] = None
    if doc.factorization is not None:
        factorization = _check_factorization(doc.factorization, starter, report)
    elif doc.trees is not None or doc.lemma is not None:
        factorization = expand_starter(starter)

    if factorization is None or not report.passed:
        _log(G.label, report)
        return report

    lemma_input: Optional[LemmaOneInput] = None
    if doc.lemma is not None:
        lemma_input = LemmaOneInput(
            group=G,
            base_graph=edges_from_doc(doc.lemma.base_graph, G),
            e1=parse_edge(doc.lemma.e1, G),
            e2=parse_edge(doc.lemma.e2, G),
            cyclic_subgroup=G.cyclic_subgroup(),
            central_involution=G.central_involution(),
            transversal=standard_transversal(G),
            pieces={name: edges_from_doc(edges, G) for name, edges in doc.lemma.pieces.items()},
        )
        report.merge(check_lemma_conditions(lemma_input, factorization))
        report.merge(check_pieces(lemma_input))

    if doc.trees is not None:
        tree_set = _tree_set(doc, G)
        report.merge(certify(tree_set, factorization))
        report.merge(recount_partition(tree_set.trees, G).to_report())
        report.merge(check_provenance(tree_set, lemma_input))

    _log(G.label, report)
    return report


def _check_factorization(
    section: FactorizationDoc, starter: Starter, report: VerificationReport
) -> Factorization:
    G = starter.group
    factors = [edges_from_doc(f, G) for f in section.factors]
    factorization = factorization_from_factors(starter, factors)
    report.merge(verify_factorization(factorization))
    if not report.passed:
        return factorization

    report.record(Condition.FACTORIZATION_EXPANSION)
    expected = set(expand_starter(starter).factors)
    stray = [f for f in factorization.factors if f not in expected]
    if stray:
        report.fail(
            Condition.FACTORIZATION_EXPANSION,
            f"{len(stray)} factor(s) are not translates of a starter block",
            witnesses=[format_edge(min(f)) for f in stray[:10] if f],
        )

    if section.block_of:
        report.record(Condition.FACTORIZATION_BLOCKS)
        if len(section.block_of) != len(factorization.block_of):
            report.fail(
                Condition.FACTORIZATION_BLOCKS,
                f"block_of has {len(section.block_of)} entries for "
                f"{len(factorization.block_of)} factors",
            )
        else:
            wrong = [
                str(idx)
                for idx, (given, owner) in enumerate(zip(section.block_of, factorization.block_of))
                if given != owner
            ]
            if wrong:
                report.fail(
                    Condition.FACTORIZATION_BLOCKS,
                    f"{len(wrong)} factor(s) name the wrong starter block",
                    witnesses=wrong[:10],
                )
    return factorization


def _tree_set(doc: ArtifactDocument, G: GroupFamily) -> RainbowTreeSet:
    assert doc.trees is not None
    return RainbowTreeSet(
        group=G,
        trees=tuple(edges_from_doc(t, G) for t in doc.trees.trees),
        t1=edges_from_doc(doc.trees.t1, G),
        t2=edges_from_doc(doc.trees.t2, G),
        transversal=tuple(G.parse_element(h) for h in doc.trees.transversal),
    )


def _log(label: str, report: VerificationReport) -> None:
    logger.info(
        "artifact_verified",
        group=label,
        passed=report.passed,
        violations=len(report.violations),
    )
