"""Versioned JSON artifacts and their round trip to domain objects."""

import json
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from regfact.constructions import Construction
from regfact.core.errors import ArtifactFormatError, ContractViolationError
from regfact.graph.edges import EdgeSet, format_edge, format_edges, parse_edge
from regfact.groups.family import GroupFamily, family_of, format_element
from regfact.oracle.models import SearchResult
from regfact.starters.models import Starter, StarterBlock

SCHEMA_VERSION = 1


class _Document(BaseModel):
    model_config = ConfigDict(populate_by_name=True, extra="forbid")


class GroupDoc(_Document):
    family: str = Field(..., description="dicyclic, abelian, semidihedral or modular")
    parameter: int = Field(..., description="s for dicyclic, n otherwise")


class BlockDoc(_Document):
    label: str = ""
    edges: list[str]
    stabilizer_generators: list[str] = Field(..., min_length=1)


class StarterDoc(_Document):
    blocks: list[BlockDoc] = Field(..., min_length=1)


class FactorizationDoc(_Document):
    factors: list[list[str]]
    block_of: list[int] = Field(default_factory=list)


class TreesDoc(_Document):
    trees: list[list[str]]
    t1: list[str]
    t2: list[str]
    transversal: list[str]


class LemmaDoc(_Document):
    base_graph: list[str]
    e1: str
    e2: str
    pieces: dict[str, list[str]] = Field(default_factory=dict)


class ArtifactDocument(_Document):
    """A starter, optionally with its factorization, trees and base graph."""

    schema_version: Literal[1] = Field(SCHEMA_VERSION, alias="schema")
    group: GroupDoc
    starter: StarterDoc
    factorization: Optional[FactorizationDoc] = None
    trees: Optional[TreesDoc] = None
    lemma: Optional[LemmaDoc] = None


class SearchDocument(_Document):
    """Starters found by the exhaustive search."""

    schema_version: Literal[1] = Field(SCHEMA_VERSION, alias="schema")
    group: GroupDoc
    complete: bool
    nodes: int
    starters: list[StarterDoc]


def _edge_list(edges: EdgeSet) -> list[str]:
    return format_edges(edges)


def group_doc(G: GroupFamily) -> GroupDoc:
    return GroupDoc(family=G.kind.value, parameter=G.param)


def starter_doc(starter: Starter) -> StarterDoc:
    return StarterDoc(
        blocks=[
            BlockDoc(
                label=blk.label,
                edges=_edge_list(blk.edges),
                stabilizer_generators=[format_element(g) for g in blk.stabilizer.generators],
            )
            for blk in starter.blocks
        ]
    )


def construction_document(construction: Construction) -> ArtifactDocument:
    """Full artifact for a certified construction."""
    G = construction.group
    F = construction.factorization
    trees = construction.trees
    lemma = construction.lemma_input
    return ArtifactDocument(
        group=group_doc(G),
        starter=starter_doc(construction.starter),
        factorization=FactorizationDoc(
            factors=[_edge_list(f) for f in F.factors], block_of=list(F.block_of)
        ),
        trees=TreesDoc(
            trees=[_edge_list(t) for t in trees.trees],
            t1=_edge_list(trees.t1),
            t2=_edge_list(trees.t2),
            transversal=[format_element(h) for h in trees.transversal],
        ),
        lemma=LemmaDoc(
            base_graph=_edge_list(lemma.base_graph),
            e1=format_edge(lemma.e1),
            e2=format_edge(lemma.e2),
            pieces={name: _edge_list(edges) for name, edges in sorted(lemma.pieces.items())},
        ),
    )


def search_document(G: GroupFamily, result: SearchResult) -> SearchDocument:
    return SearchDocument(
        group=group_doc(G),
        complete=result.complete,
        nodes=result.nodes,
        starters=[starter_doc(s) for s in result.starters],
    )


def dumps(document: BaseModel) -> str:
    """Deterministic JSON text with the ``schema`` key."""
    return document.model_dump_json(by_alias=True, indent=2, exclude_none=True) + "\n"


def loads(text: str) -> ArtifactDocument:
    """Parse an artifact.

    Raises:
        ArtifactFormatError: On invalid JSON or a schema mismatch
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArtifactFormatError(f"artifact is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ArtifactFormatError("artifact must be a JSON object")
    if raw.get("schema") != SCHEMA_VERSION:
        raise ArtifactFormatError(
            f"unsupported artifact schema {raw.get('schema')!r}, expected {SCHEMA_VERSION}"
        )
    try:
        return ArtifactDocument.model_validate(raw)
    except ValidationError as exc:
        raise ArtifactFormatError(f"artifact does not match the schema: {exc}") from exc


def group_from_doc(doc: GroupDoc, max_order: Optional[int] = None) -> GroupFamily:
    return family_of(doc.family, doc.parameter, max_order)


def edges_from_doc(items: list[str], G: GroupFamily) -> EdgeSet:
    return frozenset(parse_edge(text, G) for text in items)


def starter_from_doc(doc: StarterDoc, G: GroupFamily) -> Starter:
    """Rebuild a starter; stabilizers are regenerated from their generators.

    Raises:
        ArtifactFormatError: If an element or edge cannot be parsed
    """
    blocks = []
    for blk in doc.blocks:
        gens = [G.parse_element(g) for g in blk.stabilizer_generators]
        try:
            stabilizer = G.subgroup(*gens)
        except ContractViolationError as exc:
            raise ArtifactFormatError(f"block {blk.label!r}: {exc}") from exc
        blocks.append(
            StarterBlock(edges=edges_from_doc(blk.edges, G), stabilizer=stabilizer, label=blk.label)
        )
    return Starter(G, tuple(blocks))
