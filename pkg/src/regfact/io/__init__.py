"""Artifact formats: JSON documents, DOT graphs and edge lists."""

from regfact.io.artifacts import (
    SCHEMA_VERSION,
    ArtifactDocument,
    SearchDocument,
    construction_document,
    dumps,
    loads,
    search_document,
    starter_from_doc,
)
from regfact.io.dot import figure_to_dot, trees_to_dot
from regfact.io.text import summary, trees_to_edgelist
from regfact.io.verify import verify_document

__all__ = [
    "SCHEMA_VERSION",
    "ArtifactDocument",
    "SearchDocument",
    "construction_document",
    "dumps",
    "figure_to_dot",
    "loads",
    "search_document",
    "starter_from_doc",
    "summary",
    "trees_to_dot",
    "trees_to_edgelist",
    "verify_document",
]
