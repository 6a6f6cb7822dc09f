"""Dicyclic groups Dic(s) = <a, b | a^2s = 1, b^2 = a^s, b^-1 a b = a^-1>, order 4s."""

from regfact.constructions.base import Construction, EdgeBuilder, finalize
from regfact.graph.edges import Edge
from regfact.groups.family import GroupFamily
from regfact.starters.models import Starter, StarterBlock


def build_dicyclic(s: int) -> Construction:
    """Starter, base graph and certified rainbow trees for Dic(s), s >= 2.

    Raises:
        UnsupportedParameterError: If s < 2
        ConstructionIntegrityError: If the output fails verification
    """
    G = GroupFamily.dicyclic(s)
    B = EdgeBuilder(G)
    if s % 2 == 0:
        starter = Starter(G, tuple(_even_starter(B, s)))
        pieces = _even_pieces(B, s)
        e1, e2 = B.edge(B.a(0), B.a(s)), B.edge(B.ba(0), B.ba(s))
    else:
        starter = Starter(G, tuple(_odd_starter(B, s)))
        pieces = _odd_pieces(B, s)
        p = (s + 1) // 2
        e1, e2 = B.edge(B.a(p), B.a(s + p)), B.edge(B.ba(p), B.ba(s + p))
    return finalize(starter, pieces, e1, e2)


def _even_starter(B: EdgeBuilder, s: int) -> list[StarterBlock]:
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    blocks = [
        B.block(
            "S",
            [E(a(t), a(-t)) for t in range(1, s // 2)] + [E(one, ba(s // 2))],
            ba(0),
        )
    ]
    # inclusive upper bound: every odd power of a needs a block
    for i in range((s - 2) // 2 + 1):
        blocks.append(B.block(f"S_{2 * i + 1}", [E(one, a(2 * i + 1))], ba(0), a(2)))
    for j in range(s):
        if j != s // 2:
            blocks.append(B.block(f"S*_{j}", [E(one, ba(j))], a(1)))
    blocks.append(B.block("S_s", [E(one, a(s))]))
    return blocks


def _odd_starter(B: EdgeBuilder, s: int) -> list[StarterBlock]:
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    h = (s - 1) // 2
    edges = [E(a(t), a(s - t - 1)) for t in range(h)]
    edges += [E(ba(t), ba(s - t - 2)) for t in range(h)]
    edges.append(E(a(h), ba(s - 1)))
    blocks = [B.block("S", edges, a(s))]
    for i in range(s):
        if i != h:
            blocks.append(B.block(f"S*_{i}", [E(one, ba(i))], a(1)))
    blocks.append(B.block("S_s", [E(one, a(s))]))
    return blocks


def _even_first_component(B: EdgeBuilder, s: int) -> list[Edge]:
    a, ba, E = B.a, B.ba, B.edge
    one, b = a(0), ba(0)
    edges = [E(one, ba(s // 2)), E(one, ba(3 * s // 2))]
    for t in range(1, s // 2):
        edges += [E(one, a(2 * t)), E(b, ba(s + 2 * t))]
    for i in range((s - 2) // 2 + 1):
        edges += [E(one, a(2 * i + 1)), E(b, ba(2 * i + 1))]
    return edges


def _even_pieces(B: EdgeBuilder, s: int) -> dict[str, list[Edge]]:
    a, ba, E = B.a, B.ba, B.edge
    first = _even_first_component(B, s)
    half = (s - 2) // 2

    if s == 2:
        return {"T'": first + [E(ba(1), a(3))], "T''": [E(a(2), ba(2))]}

    if s % 4 == 2:
        skip = (s - 2) // 4
        second = [E(a(s), ba(s - 2 * t)) for t in range(half + 1)]
        second += [E(a(s), ba(s + 2 * j + 1)) for j in range(half + 1) if j != skip]
        second += [E(ba(s + 1), a(2 * s - 2 * j)) for j in range(1, half + 1) if j != skip]
        second += [E(ba(2 * s - 1), a(s + 2 * t - 1)) for t in range(1, half + 1)]
        second += [E(ba(s), a(2 * s - 1)), E(ba(s // 2 + 1), a(3 * s // 2 + 1))]
        return {"T'": first, "T''": second}

    skip = s // 4
    first.append(E(ba(s // 2 - 1), a(3 * s // 2 - 1)))
    second = [E(a(s), ba(s - 2 * t)) for t in range(half + 1) if t != skip]
    second += [E(a(s), ba(s + 2 * j + 1)) for j in range(half + 1)]
    second += [E(ba(s + 1), a(2 * s - 2 * j)) for j in range(1, half + 1)]
    second += [E(ba(2 * s - 1), a(s + 2 * t - 1)) for t in range(1, half + 1) if t != skip]
    second.append(E(ba(s), a(2 * s - 1)))
    return {"T'": first, "T''": second}


def _odd_pieces(B: EdgeBuilder, s: int) -> dict[str, list[Edge]]:
    a, ba, E = B.a, B.ba, B.edge
    one, b = a(0), ba(0)
    h, p = (s - 1) // 2, (s + 1) // 2

    first: list[Edge] = []
    for t in range(1, h + 1):
        first += [
            E(one, a(2 * t)),
            E(b, ba(2 * s - 2 * t)),
            E(one, a(2 * t - 1)),
            E(b, ba(2 * s - 2 * t + 1)),
        ]
    first += [E(a(p), ba(s)), E(a(s), ba(h))]

    second: list[Edge] = []
    for i in range(1, s):
        if i != h:
            second += [E(one, ba(i)), E(ba(s), a(2 * s - i))]
    second += [E(a(s + h), ba(h)), E(a(s + p), ba(s + p))]
    return {"T'": first, "T''": second}
