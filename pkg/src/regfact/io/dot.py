"""Graphviz DOT export of tree sets and base-graph figures."""

from regfact.graph.connectivity import components
from regfact.graph.edges import Edge, EdgeSet, translate
from regfact.groups.family import GroupElement, GroupFamily, format_element
from regfact.rainbow.models import LemmaOneInput, RainbowTreeSet
from regfact.starters.models import Factorization

COMPONENT_COLORS = ("blue", "darkgreen", "deepskyblue", "forestgreen", "navy", "limegreen")
BRIDGE_COLOR = "red"


def _node(g: GroupElement) -> str:
    return f'"{format_element(g)}"'


def factor_color(index: int, count: int) -> str:
    """Evenly spaced HSV hue for factor ``index`` of ``count``."""
    hue = index / max(count, 1)
    return f"{hue:.3f} 0.850 0.850"


def _nodes(G: GroupFamily) -> list[str]:
    return [f"  {_node(g)};" for g in G.elements]


def trees_to_dot(tree_set: RainbowTreeSet, factorization: Factorization) -> str:
    """One ``graph`` per tree; every edge carries its factor index and a factor colour."""
    G = tree_set.group
    count = len(factorization.factors)
    colors: dict[Edge, int] = {}
    for idx, factor in enumerate(factorization.factors):
        for e in factor:
            colors[e] = idx

    out: list[str] = []
    for t, tree in enumerate(tree_set.trees):
        out.append(f'graph "T{t}" {{')
        out.append(f'  label="{G.label} tree {t}";')
        out.extend(_nodes(G))
        for e in sorted(tree, key=lambda e: (colors.get(e, -1), e)):
            idx = colors.get(e, -1)
            out.append(
                f'  {_node(e.u)} -- {_node(e.v)} '
                f'[factor={idx}, color="{factor_color(idx, count)}"];'
            )
        out.append("}")
    return "\n".join(out) + "\n"


def _styled_graph(
    name: str, title: str, G: GroupFamily, body: EdgeSet, bridge: Edge
) -> list[str]:
    out = [f'graph "{name}" {{', f'  label="{title}";']
    out.extend(_nodes(G))
    for c, component in enumerate(components(body, G)):
        color = COMPONENT_COLORS[c % len(COMPONENT_COLORS)]
        members = [e for e in sorted(body) if e.u in component]
        for e in members:
            out.append(
                f'  {_node(e.u)} -- {_node(e.v)} [class="component{c}", color="{color}"];'
            )
    out.append(
        f'  {_node(bridge.u)} -- {_node(bridge.v)} '
        f'[class="bridge", color="{BRIDGE_COLOR}", penwidth=2];'
    )
    out.append("}")
    return out


def figure_to_dot(lemma_input: LemmaOneInput) -> str:
    """R + e1 and R*j + e2, with R's components and the bridge edge styled apart."""
    G = lemma_input.group
    shifted = translate(lemma_input.base_graph, lemma_input.central_involution, G)
    j = format_element(lemma_input.central_involution)
    out = _styled_graph("T1", f"R + e1, {G.label}", G, lemma_input.base_graph, lemma_input.e1)
    out += _styled_graph("T2", f"R*{j} + e2, {G.label}", G, shifted, lemma_input.e2)
    return "\n".join(out) + "\n"
