"""Rainbow spanning tree assembly and certification."""

from regfact.rainbow.lemma import (
    assemble,
    bridge_block,
    certify,
    check_condition_1,
    check_condition_2,
    check_condition_3,
    check_lemma_conditions,
    check_lemma_input,
    check_pieces,
    check_provenance,
    partition_by_block,
    standard_transversal,
)
from regfact.rainbow.models import LemmaOneInput, RainbowTreeSet

__all__ = [
    "LemmaOneInput",
    "RainbowTreeSet",
    "assemble",
    "bridge_block",
    "certify",
    "check_condition_1",
    "check_condition_2",
    "check_condition_3",
    "check_lemma_conditions",
    "check_lemma_input",
    "check_pieces",
    "check_provenance",
    "partition_by_block",
    "standard_transversal",
]
