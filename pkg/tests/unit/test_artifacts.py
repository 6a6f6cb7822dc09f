"""Tests for JSON artifacts, their verification, and the DOT and text exports."""

import json
import re

import pytest

from regfact.core import ArtifactFormatError, Condition, UnsupportedParameterError
from regfact.io import (
    ArtifactDocument,
    construction_document,
    dumps,
    figure_to_dot,
    loads,
    search_document,
    starter_from_doc,
    summary,
    trees_to_dot,
    trees_to_edgelist,
    verify_document,
)
from regfact.oracle import exhaustive_starter_search

NODE_LINE = re.compile(r'^  "[^"]+";$')


def test_document_shape(q8_construction):
    text = dumps(construction_document(q8_construction))
    raw = json.loads(text)
    assert raw["schema"] == 1
    assert raw["group"] == {"family": "dicyclic", "parameter": 2}
    assert len(raw["factorization"]["factors"]) == 7
    assert len(raw["trees"]["trees"]) == 4
    assert raw["lemma"]["e1"] == "[1,a^2]"
    assert raw["starter"]["blocks"][-1]["stabilizer_generators"] == ["a", "b"]


def test_dumps_is_deterministic(build):
    c = build("abelian", 8)
    assert dumps(construction_document(c)) == dumps(construction_document(c))


def test_loads_round_trip(q8_construction):
    doc = construction_document(q8_construction)
    assert loads(dumps(doc)) == doc


def test_starter_round_trip(q8_construction):
    doc = construction_document(q8_construction)
    starter = starter_from_doc(doc.starter, q8_construction.group)
    assert starter.key() == q8_construction.starter.key()


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"schema": 2, "group": {"family": "dicyclic", "parameter": 2}}',
        '{"group": {"family": "dicyclic", "parameter": 2}}',
        '{"schema": 1, "group": {"family": "dicyclic", "parameter": 2}}',
    ],
)
def test_loads_rejects_bad_documents(text):
    with pytest.raises(ArtifactFormatError):
        loads(text)


def test_loads_rejects_unknown_sections(q8_construction):
    raw = json.loads(dumps(construction_document(q8_construction)))
    raw["extra"] = {}
    with pytest.raises(ArtifactFormatError):
        loads(json.dumps(raw))


def test_verify_generated_document(build):
    for family, param in (("dicyclic", 2), ("abelian", 4), ("modular", 8)):
        doc = loads(dumps(construction_document(build(family, param))))
        report = verify_document(doc)
        assert report.passed, [str(v) for v in report.violations]
        assert Condition.TREES_PARTITION in report.checked
        assert Condition.ORACLE_RECOUNT in report.checked
        assert Condition.LEMMA_BRIDGES in report.checked
        assert Condition.FACTORIZATION_EXPANSION in report.checked


def test_starter_only_document_checks_the_starter(q8_construction):
    full = construction_document(q8_construction)
    doc = ArtifactDocument(group=full.group, starter=full.starter)
    report = verify_document(loads(dumps(doc)))
    assert report.passed
    assert set(report.checked) == {
        Condition.STARTER_DIFFERENCES,
        Condition.STARTER_TRANSVERSAL,
        Condition.STARTER_INVOLUTIONS,
    }


def test_corrupted_tree_edge_is_caught(q8_construction):
    doc = construction_document(q8_construction)
    doc.trees.trees[0][0] = doc.trees.trees[1][0]
    report = verify_document(doc)
    assert Condition.TREES_PARTITION in report.violated_conditions()
    assert Condition.ORACLE_RECOUNT in report.violated_conditions()


def test_corrupted_factor_is_caught(q8_construction):
    doc = construction_document(q8_construction)
    factors = doc.factorization.factors
    factors[1].append(factors[0].pop())
    report = verify_document(doc)
    assert Condition.FACTORIZATION_MATCHING in report.violated_conditions()


def _swap_t1_edge(doc):
    doc.trees.t1[0] = doc.trees.t2[0]


def _swap_t2_edge(doc):
    doc.trees.t2[0] = doc.trees.t1[0]


def _shift_transversal(doc):
    doc.trees.transversal[1] = "a^3"


def _overlap_pieces(doc):
    doc.lemma.pieces["T''"].append(doc.lemma.pieces["T'"][0])


def _drop_piece(doc):
    doc.lemma.pieces["T''"] = []


def _relabel_factor(doc):
    doc.factorization.block_of[0] = 3


@pytest.mark.parametrize(
    "corrupt, condition",
    [
        (_swap_t1_edge, Condition.TREES_PROVENANCE),
        (_swap_t2_edge, Condition.TREES_PROVENANCE),
        (_shift_transversal, Condition.TREES_PROVENANCE),
        (_overlap_pieces, Condition.LEMMA_PIECES),
        (_drop_piece, Condition.LEMMA_PIECES),
        (_relabel_factor, Condition.FACTORIZATION_BLOCKS),
    ],
)
def test_every_section_is_checked(q8_construction, corrupt, condition):
    doc = construction_document(q8_construction)
    corrupt(doc)
    report = verify_document(doc)
    assert report.violated_conditions() == {condition}


def test_short_block_of_is_caught(q8_construction):
    doc = construction_document(q8_construction)
    doc.factorization.block_of.pop()
    report = verify_document(doc)
    assert report.violated_conditions() == {Condition.FACTORIZATION_BLOCKS}


def test_broken_starter_stops_before_the_factorization(q8_construction):
    doc = construction_document(q8_construction)
    doc.starter.blocks.pop()
    report = verify_document(doc)
    assert Condition.STARTER_DIFFERENCES in report.violated_conditions()
    assert Condition.FACTORIZATION_COUNT not in report.checked


def test_trees_section_needs_its_provenance(q8_construction):
    raw = json.loads(dumps(construction_document(q8_construction)))
    del raw["trees"]["t1"]
    with pytest.raises(ArtifactFormatError):
        loads(json.dumps(raw))


def test_unparsable_edge_is_a_format_error(q8_construction):
    doc = construction_document(q8_construction)
    doc.trees.trees[0][0] = "[1,q]"
    with pytest.raises(ArtifactFormatError):
        verify_document(doc)


def test_order_cap_applies_to_imports(build):
    doc = construction_document(build("semidihedral", 16))
    with pytest.raises(UnsupportedParameterError):
        verify_document(doc, max_order=16)


def test_search_document(q8):
    result = exhaustive_starter_search(q8)
    raw = json.loads(dumps(search_document(q8, result)))
    assert raw["schema"] == 1
    assert raw["complete"] is True
    assert len(raw["starters"]) == len(result.starters)


def test_trees_to_dot_colors_every_factor(build):
    c = build("semidihedral", 16)
    text = trees_to_dot(c.trees, c.factorization)
    assert text.count("graph ") == 16
    factors = {int(m) for m in re.findall(r"factor=(\d+)", text)}
    assert factors == set(range(31))


def test_dot_colour_follows_the_factor_index(build):
    c = build("abelian", 8)
    text = trees_to_dot(c.trees, c.factorization)
    pairs = set(re.findall(r'factor=(\d+), color="([^"]+)"', text))
    assert len(pairs) == len(c.factorization.factors)
    assert len({colour for _, colour in pairs}) == len(pairs)


def test_figure_has_two_graphs_on_every_vertex(build):
    c = build("abelian", 16)
    text = figure_to_dot(c.lemma_input)
    assert text.count("graph ") == 2
    assert sum(bool(NODE_LINE.match(line)) for line in text.splitlines()) == 64
    assert text.count('class="bridge"') == 2


def test_figure_styles_components_apart(build):
    c = build("modular", 8)
    lemma = c.lemma_input
    text = figure_to_dot(lemma)
    first = text.split("}\n")[0]
    u, v = (f'"{x}"' for x in str(lemma.e1)[1:-1].split(","))
    assert f'{u} -- {v} [class="bridge", color="red", penwidth=2]' in first
    assert first.count('class="component0"') + first.count('class="component1"') == len(
        lemma.base_graph
    )
    assert 'class="component2"' not in first


def test_edgelist(q8_construction):
    text = trees_to_edgelist(q8_construction)
    lines = text.splitlines()
    assert lines[0].startswith("# Q8")
    assert len(lines) == 1 + 4 * 7
    assert lines[1].split()[:3] == ["0", "1", "a"]
    assert all(len(line.split()) == 4 for line in lines[1:])


def test_summary(q8_construction):
    text = summary(q8_construction)
    assert "Q8" in text
    assert "factors     7" in text
    assert "2 component(s)" in text
