"""Abelian groups Z2 x Zn with 4 | n, written <a, b | a^n = b^2 = 1, ab = ba>."""

from regfact.constructions.base import Construction, EdgeBuilder, finalize
from regfact.graph.edges import Edge
from regfact.groups.family import GroupFamily
from regfact.starters.models import Starter, StarterBlock


def build_abelian(n: int) -> Construction:
    """Starter, base graph and certified rainbow trees for Z2 x Zn.

    Raises:
        UnsupportedParameterError: If n < 4 or n is not a multiple of 4
        ConstructionIntegrityError: If the output fails verification
    """
    G = GroupFamily.abelian(n)
    B = EdgeBuilder(G)
    starter = Starter(G, tuple(_starter(B, n)))
    q = n // 4
    if n == 4:
        pieces = _pieces_n4(B)
        e1, e2 = B.edge(B.a(1), B.a(3)), B.edge(B.ba(0), B.ba(2))
    else:
        pieces = _pieces(B, n)
        e1, e2 = B.edge(B.a(3 * q), B.a(q)), B.edge(B.ba(3 * q), B.ba(q))
    return finalize(starter, pieces, e1, e2)


def _starter(B: EdgeBuilder, n: int) -> list[StarterBlock]:
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    q, half = n // 4, n // 2
    klein = (ba(0), a(half))

    blocks = [
        B.block("S", [E(a(i), a(1 - i)) for i in range(1, q + 1)], *klein),
        B.block(
            "S'",
            [E(a(i), a(half - i)) for i in range(1, q)] + [E(one, ba(q))],
            *klein,
        ),
    ]
    # empty range when n = 4
    for i in range(1, half):
        if i != q:
            blocks.append(B.block(f"S_{i}", [E(one, ba(i))], a(1)))
    blocks += [
        B.block("S*_1", [E(one, ba(0))]),
        B.block("S*_2", [E(one, ba(half))]),
        B.block("S*", [E(one, a(half))]),
    ]
    return blocks


def _pieces(B: EdgeBuilder, n: int) -> dict[str, list[Edge]]:
    a, ba, E = B.a, B.ba, B.edge
    one, b = a(0), ba(0)
    q, half = n // 4, n // 2

    r1: list[Edge] = []
    for i in range(1, q + 1):
        r1 += [E(one, a(2 * i - 1)), E(ba(q), ba(q + 2 * i - 1))]

    r2: list[Edge] = []
    for i in range(1, q):
        r2 += [E(one, a(half - 2 * i)), E(ba(q), ba(3 * q - 2 * i))]
    r2 += [E(one, ba(q)), E(ba(q), a(half))]

    r3 = [E(a(q + 2), ba(3 * q + 1)), E(b, a(half - 1))]
    for i in range(1, q):
        r3 += [E(one, ba(i)), E(ba(3 * q), a(3 * q + i))]
    for i in range(1, q - 1):
        r3 += [E(a(half + 1), ba(3 * q + i + 1)), E(ba(half - 2 * i), a(3 * q - i))]

    r4 = [E(a(3 * q), ba(3 * q)), E(ba(1), a(half + 1))]
    return {"R_1": r1, "R_2": r2, "R_3": r3, "R_4": r4}


def _pieces_n4(B: EdgeBuilder) -> dict[str, list[Edge]]:
    """Z2 x Z4.

    The printed clause list puts [ba, ba^2] and [b, ba^3] into one factor and
    never meets the fixed factor of [1, ba^2]; [ba, ba^2] is replaced by
    [1, ba^2], which keeps both components of R intact.
    """
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    return {
        "R_1": [E(one, a(1)), E(one, ba(2))],
        "R_2": [E(one, ba(1)), E(ba(1), a(2))],
        "R_4": [E(a(3), ba(3)), E(ba(0), ba(3))],
    }
