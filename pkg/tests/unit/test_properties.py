"""Property-based tests of the group arithmetic and the edge action."""

from hypothesis import given
from hypothesis import strategies as st

from regfact.graph.edges import Edge, act, delta, parse_edge
from regfact.groups.family import GroupElement, GroupFamily, format_element


@st.composite
def groups(draw) -> GroupFamily:
    kind = draw(st.sampled_from(["dicyclic", "abelian", "semidihedral", "modular"]))
    if kind == "dicyclic":
        return GroupFamily.dicyclic(draw(st.integers(min_value=2, max_value=40)))
    if kind == "abelian":
        return GroupFamily.abelian(4 * draw(st.integers(min_value=1, max_value=20)))
    n = 2 ** draw(st.integers(min_value=3, max_value=7))
    return GroupFamily.from_name(kind, n)


def element(data, G: GroupFamily) -> GroupElement:
    eps = data.draw(st.integers(min_value=0, max_value=1))
    k = data.draw(st.integers(min_value=0, max_value=G.cyclic_order - 1))
    return GroupElement(eps, k)


def edge(data, G: GroupFamily) -> Edge:
    x = element(data, G)
    step = data.draw(st.integers(min_value=1, max_value=G.order - 1))
    y = G.elements[(G.index_of[x] + step) % G.order]
    return Edge.of(x, y)


@given(groups(), st.data())
def test_multiplication_is_associative(G, data):
    x, y, z = (element(data, G) for _ in range(3))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


@given(groups(), st.data())
def test_inverse_and_identity(G, data):
    x = element(data, G)
    assert G.mul(x, G.inv(x)) == G.identity
    assert G.mul(G.inv(x), x) == G.identity
    assert G.mul(x, G.identity) == x == G.mul(G.identity, x)


@given(groups(), st.data(), st.integers(-50, 50), st.integers(-50, 50))
def test_powers_add(G, data, m, k):
    x = element(data, G)
    assert G.mul(G.power(x, m), G.power(x, k)) == G.power(x, m + k)


@given(groups())
def test_central_involution_commutes(G):
    j = G.central_involution()
    assert G.mul(j, j) == G.identity
    assert G.mul(G.b, j) == G.mul(j, G.b)
    assert G.mul(G.a(), j) == G.mul(j, G.a())


@given(groups(), st.data())
def test_action_composes(G, data):
    e = edge(data, G)
    g, h = element(data, G), element(data, G)
    assert act(act(e, g, G), h, G) == act(e, G.mul(g, h), G)


@given(groups(), st.data())
def test_delta_is_invariant(G, data):
    e = edge(data, G)
    assert delta(act(e, element(data, G), G), G) == delta(e, G)


@given(groups(), st.data())
def test_text_round_trip(G, data):
    x = element(data, G)
    assert G.parse_element(format_element(x)) == x
    e = edge(data, G)
    assert parse_edge(str(e), G) == e
