"""Plain-text renderings: edge lists and the one-screen summary."""

from regfact.constructions import Construction
from regfact.graph.connectivity import components
from regfact.groups.family import format_element


def trees_to_edgelist(construction: Construction) -> str:
    """``tree u v factor`` per line, trees in order and edges sorted within each tree."""
    F = construction.factorization
    lines = [f"# {construction.group.label} trees={len(construction.trees.trees)}"]
    for t, tree in enumerate(construction.trees.trees):
        for e in sorted(tree):
            lines.append(
                f"{t} {format_element(e.u)} {format_element(e.v)} {F.color_of[e]}"
            )
    return "\n".join(lines) + "\n"


def summary(construction: Construction) -> str:
    G = construction.group
    lemma = construction.lemma_input
    parts = components(lemma.base_graph, G)
    lines = [
        f"group       {G.label}",
        f"order       {G.order}",
        f"blocks      {len(construction.starter.blocks)}",
        f"factors     {len(construction.factorization.factors)}",
        f"trees       {len(construction.trees.trees)}",
        f"R edges     {len(lemma.base_graph)} in {len(parts)} component(s)",
        "certified   yes",
    ]
    return "\n".join(lines) + "\n"
