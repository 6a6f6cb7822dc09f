"""Tests for the brute-force oracle."""

import pytest

from regfact.core import Condition, ContractViolationError
from regfact.graph import translate
from regfact.groups import GroupFamily
from regfact.oracle import (
    SearchBudget,
    exhaustive_group_axiom_check,
    exhaustive_starter_search,
    recount_partition,
    starter_in,
)
from regfact.rainbow import certify
from regfact.starters import (
    Starter,
    StarterBlock,
    expand_starter,
    validate_starter,
    verify_factorization,
)

AXIOM_GROUPS = [
    pytest.param(G, marks=pytest.mark.slow) if G.order == 64 else G
    for G in (
        [GroupFamily.dicyclic(s) for s in (2, 3, 4, 5, 8, 12, 16)]
        + [GroupFamily.abelian(n) for n in (4, 8, 16, 32)]
        + [GroupFamily.semidihedral(n) for n in (8, 16, 32)]
        + [GroupFamily.modular(n) for n in (8, 16, 32)]
    )
]


def test_recount_of_q8_trees(q8_construction):
    recount = recount_partition(q8_construction.trees.trees, q8_construction.group)
    assert recount.passed
    assert len(recount.counts) == 28
    assert set(recount.counts.values()) == {1}
    assert recount.to_report().passed


def test_recount_with_a_duplicated_tree(q8_construction):
    trees = list(q8_construction.trees.trees)
    trees[1] = trees[0]
    recount = recount_partition(trees, q8_construction.group)
    assert not recount.passed
    assert len(recount.duplicated) == 7
    assert len(recount.missing) == 7
    assert Condition.ORACLE_RECOUNT in recount.to_report().violated_conditions()


def test_recount_of_nothing(q8):
    recount = recount_partition([], q8)
    assert set(recount.counts.values()) == {0}
    assert len(recount.missing) == 28
    assert recount.duplicated == []


def test_recount_agrees_with_certify(grid_construction):
    c = grid_construction
    assert recount_partition(c.trees.trees, c.group).passed
    assert certify(c.trees, c.factorization).passed
    broken = list(c.trees.trees)
    broken[-1] = broken[0]
    assert recount_partition(broken, c.group).passed is False


def test_axioms_of_q8():
    report = exhaustive_group_axiom_check(GroupFamily.dicyclic(2))
    assert report.passed
    assert "512 triples" in report.subject
    assert Condition.GROUP_ASSOCIATIVITY in report.checked
    assert Condition.GROUP_RELATIONS in report.checked


@pytest.mark.parametrize("G", AXIOM_GROUPS, ids=str)
def test_axioms_hold_up_to_order_64(G):
    assert exhaustive_group_axiom_check(G).passed


def test_axiom_check_refuses_large_groups():
    with pytest.raises(ContractViolationError):
        exhaustive_group_axiom_check(GroupFamily.abelian(64))


def test_search_q8_finds_the_built_starter(q8, q8_construction):
    result = exhaustive_starter_search(q8)
    assert result.complete
    assert result.starters
    assert starter_in(result, q8_construction.starter)


def test_search_z2xz4_finds_the_built_starter(z2z4, build):
    result = exhaustive_starter_search(z2z4)
    assert result.complete
    assert starter_in(result, build("abelian", 4).starter)


def test_search_finds_dic3_up_to_block_translation(build):
    c = build("dicyclic", 3)
    result = exhaustive_starter_search(c.group)
    assert result.complete
    assert all(s.key() != c.starter.key() for s in result.starters)
    assert starter_in(result, c.starter)


def test_starter_in_ignores_translated_blocks(q8, q8_construction):
    result = exhaustive_starter_search(q8)
    g = q8.ba(1)

    def conjugate(x):
        return q8.mul(q8.mul(q8.inv(g), x), g)

    moved = Starter(
        q8,
        tuple(
            StarterBlock(
                edges=translate(blk.edges, g, q8),
                stabilizer=q8.subgroup(*(conjugate(x) for x in blk.stabilizer.generators)),
                label=blk.label,
            )
            for blk in q8_construction.starter.blocks
        ),
    )
    assert validate_starter(moved).passed
    assert starter_in(result, moved)


def test_search_results_expand_to_factorizations(q8):
    result = exhaustive_starter_search(q8)
    for starter in result.starters:
        assert validate_starter(starter).passed
        assert verify_factorization(expand_starter(starter)).passed


def test_zero_node_budget_gives_an_empty_partial_result(q8):
    result = exhaustive_starter_search(q8, SearchBudget(max_nodes=0))
    assert not result.complete
    assert result.starters == []


def test_search_refuses_groups_beyond_the_budget():
    with pytest.raises(ContractViolationError):
        exhaustive_starter_search(GroupFamily.semidihedral(16))
    with pytest.raises(ContractViolationError):
        exhaustive_starter_search(GroupFamily.dicyclic(2), SearchBudget(max_group_order=4))


def test_budget_ceiling_is_sixteen():
    with pytest.raises(ValueError):
        SearchBudget(max_group_order=32)
