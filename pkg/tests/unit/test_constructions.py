"""End-to-end checks of the four family constructions."""

from collections import Counter

import pytest

from regfact.constructions import build_construction, registry
from regfact.core import UnsupportedParameterError
from regfact.graph import (
    Edge,
    act,
    all_edges,
    components,
    is_short,
    is_spanning_tree,
    translate,
)
from regfact.rainbow import (
    certify,
    check_lemma_conditions,
    check_pieces,
    check_provenance,
    partition_by_block,
)
from regfact.starters import validate_starter, verify_factorization


def _edges(G, pairs):
    return {Edge.of(G.parse_element(x), G.parse_element(y)) for x, y in pairs}


def test_family_grid(grid_construction):
    c = grid_construction
    G = c.group
    n = G.order // 2

    assert validate_starter(c.starter).passed
    assert len(c.factorization.factors) == 2 * n - 1
    assert verify_factorization(c.factorization).passed

    assert len(c.trees.trees) == n
    assert certify(c.trees, c.factorization).passed
    assert check_lemma_conditions(c.lemma_input, c.factorization).passed

    colors = c.factorization.color_of
    for tree in c.trees.trees:
        assert sorted(colors[e] for e in tree) == list(range(2 * n - 1))


def test_base_graph_is_a_two_piece_forest(grid_construction):
    c = grid_construction
    G = c.group
    R = c.lemma_input.base_graph
    assert len(R) == G.order - 2
    assert is_spanning_tree(R | {c.lemma_input.e1}, G)
    assert is_spanning_tree(R | {c.lemma_input.e2}, G)


def test_t1_and_t2_differ_only_in_their_bridges(grid_construction):
    c = grid_construction
    G = c.group
    lemma = c.lemma_input
    j = lemma.central_involution
    assert translate(c.trees.t1, j, G) ^ c.trees.t2 == {act(lemma.e1, j, G), lemma.e2}


def test_bridge_translates_make_up_the_j_factor(grid_construction):
    c = grid_construction
    G = c.group
    lemma = c.lemma_input
    F = c.factorization
    bridges = [act(lemma.e1, h, G) for h in c.trees.transversal]
    bridges += [act(lemma.e2, h, G) for h in c.trees.transversal]
    assert len(set(bridges)) == G.order // 2
    assert F.factors[F.color_of[lemma.e1]] == frozenset(bridges)


def test_every_long_edge_lies_in_exactly_one_tree(grid_construction):
    c = grid_construction
    G = c.group
    counts = Counter(e for tree in c.trees.trees for e in tree)
    long_edges = [e for e in all_edges(G) if not is_short(e, G)]
    assert long_edges
    assert {counts[e] for e in long_edges} == {1}


def test_block_sizes_give_the_factor_counts(grid_construction):
    c = grid_construction
    G = c.group
    F = c.factorization
    for i, blk in enumerate(c.starter.blocks):
        t = len(F.factors_of_block(i))
        assert t == G.order // blk.stabilizer.order
        assert t == sum(1 if is_short(e, G) else 2 for e in blk.edges)


def test_fixed_factors_come_from_single_short_edges(grid_construction):
    c = grid_construction
    G = c.group
    F = c.factorization
    for idx, factor in enumerate(F.factors):
        fixed = all(translate(factor, g, G) == factor for g in (G.a(1), G.b))
        blk = c.starter.blocks[F.block_of[idx]]
        single_short = len(blk.edges) == 1 and is_short(next(iter(blk.edges)), G)
        assert fixed == (single_short and blk.stabilizer.order == G.order)
        assert fixed == (idx in F.fixed_factors)


def test_trees_are_the_translates_of_t1_and_t2(grid_construction):
    assert check_provenance(grid_construction.trees, grid_construction.lemma_input).passed
    assert check_pieces(grid_construction.lemma_input).passed


def test_q8_first_tree_edges(q8_construction):
    G = q8_construction.group
    expected = _edges(
        G,
        [("1", "a"), ("1", "ba^3"), ("1", "ba"), ("b", "ba"), ("ba", "a^3"), ("a^2", "ba^2"), ("1", "a^2")],
    )
    assert q8_construction.trees.t1 == expected
    assert q8_construction.trees.trees[0] == expected


def test_q8_second_tree_is_the_shifted_base_graph(q8_construction):
    G = q8_construction.group
    expected = _edges(
        G,
        [("a^2", "a^3"), ("a^2", "ba^3"), ("a^2", "ba"), ("ba^2", "ba^3"), ("ba^3", "a"), ("1", "b"), ("b", "ba^2")],
    )
    assert q8_construction.trees.t2 == expected


def test_q8_pieces_and_bridges(q8_construction):
    G = q8_construction.group
    lemma = q8_construction.lemma_input
    assert lemma.pieces["T''"] == _edges(G, [("a^2", "ba^2")])
    assert len(lemma.pieces["T'"]) == 5
    assert lemma.e1 == Edge.of(G.identity, G.a(2))
    assert lemma.e2 == Edge.of(G.b, G.ba(2))
    assert [len(part) for part in components(lemma.base_graph, G)] == [6, 2]


def test_z2xz4_keeps_the_printed_clauses(build):
    c = build("abelian", 4)
    G = c.group
    lemma = c.lemma_input
    assert lemma.pieces["R_2"] == _edges(G, [("1", "ba"), ("ba", "a^2")])
    assert lemma.pieces["R_4"] == _edges(G, [("a^3", "ba^3"), ("b", "ba^3")])
    # the bridge is e1 = [a, a^3], not e2
    assert lemma.e1 == Edge.of(G.a(1), G.a(3))
    assert lemma.e2 == Edge.of(G.b, G.ba(2))


def test_z2xz4_replaces_the_edge_that_breaks_the_rainbow(build):
    c = build("abelian", 4)
    G = c.group
    F = c.factorization
    printed = Edge.of(G.ba(1), G.ba(2))
    kept = Edge.of(G.b, G.ba(3))
    # the printed R_1 edge shares a factor with an R_4 edge
    assert F.color_of[printed] == F.color_of[kept]
    assert printed not in c.lemma_input.base_graph
    assert Edge.of(G.identity, G.ba(2)) in c.lemma_input.pieces["R_1"]


def test_modular_8_base_graph_and_bridge(build):
    c = build("modular", 8)
    G = c.group
    expected = _edges(
        G,
        [
            ("1", "a"), ("1", "a^2"), ("1", "a^3"),
            ("ba^2", "ba^4"), ("ba^2", "ba"), ("ba^2", "ba^7"),
            ("ba^4", "a^2"), ("ba^4", "a^7"),
            ("a^2", "b"), ("b", "a^5"), ("b", "a^4"),
            ("ba^5", "a^4"), ("ba^3", "a^4"),
            ("a^6", "ba^6"), ("a^2", "a^6"),
        ],
    )
    assert c.trees.t1 == expected


def test_t2_is_the_base_graph_times_j(build):
    for family, param in (("dicyclic", 3), ("abelian", 8), ("semidihedral", 8)):
        c = build(family, param)
        G = c.group
        lemma = c.lemma_input
        assert c.trees.t2 == translate(lemma.base_graph, G.central_involution(), G) | {lemma.e2}


def test_base_graph_parts_follow_the_blocks(q8_construction):
    parts = partition_by_block(q8_construction.lemma_input.base_graph, q8_construction.starter)
    sizes = Counter({i: len(edges) for i, edges in parts.items()})
    # every block but the fixed one gets one edge per factor
    assert sizes == Counter({0: 2, 1: 2, 2: 2})


def test_registry_lists_every_family():
    assert registry.list_families() == ["abelian", "dicyclic", "modular", "semidihedral"]
    assert registry.get("nope") is None


@pytest.mark.parametrize(("family", "param"), [("cyclic", 4), ("abelian", 6), ("dicyclic", 1)])
def test_unsupported_requests(family, param):
    with pytest.raises(UnsupportedParameterError):
        build_construction(family, param)


def test_builds_are_deterministic():
    first = build_construction("semidihedral", 16)
    second = build_construction("semidihedral", 16)
    assert first.factorization.factors == second.factorization.factors
    assert first.trees.trees == second.trees.trees
