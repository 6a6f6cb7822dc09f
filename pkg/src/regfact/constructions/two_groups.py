"""The two non-abelian 2-groups with a cyclic subgroup of index two and n >= 8.

SD(n) = <a, b | a^n = b^2 = 1, bab = a^(n/2 - 1)>
M(n)  = <a, b | a^n = b^2 = 1, bab = a^(n/2 + 1)>

n is a power of two in both. SD(8) is SD16 and M(8) is M16.
"""

from regfact.constructions.base import Construction, EdgeBuilder, finalize
from regfact.graph.edges import Edge
from regfact.groups.family import GroupFamily
from regfact.starters.models import Starter, StarterBlock


def build_semidihedral(n: int) -> Construction:
    """Starter, base graph and certified rainbow trees for SD(n).

    Raises:
        UnsupportedParameterError: If n < 8 or n is not a power of two
        ConstructionIntegrityError: If the output fails verification
    """
    G = GroupFamily.semidihedral(n)
    B = EdgeBuilder(G)
    starter = Starter(G, tuple(_semidihedral_starter(B, n)))
    pieces = _semidihedral_pieces(B, n)
    q, hn = n // 4, n // 2
    if n == 8:
        e1, e2 = B.edge(B.a(3), B.a(7)), B.edge(B.ba(0), B.ba(4))
    else:
        e1 = B.edge(B.a(hn + q - 2), B.a(q - 2))
        e2 = B.edge(B.ba(0), B.ba(hn))
    return finalize(starter, pieces, e1, e2)


def build_modular(n: int) -> Construction:
    """Starter, base graph and certified rainbow trees for M(n).

    Raises:
        UnsupportedParameterError: If n < 8 or n is not a power of two
        ConstructionIntegrityError: If the output fails verification
    """
    G = GroupFamily.modular(n)
    B = EdgeBuilder(G)
    starter = Starter(G, tuple(_modular_starter(B, n)))
    pieces = _modular_pieces(B, n)
    q = n // 4
    e1 = B.edge(B.a(3 * q), B.a(q))
    e2 = B.edge(B.ba(3 * q), B.ba(q))
    return finalize(starter, pieces, e1, e2)


def _semidihedral_starter(B: EdgeBuilder, n: int) -> list[StarterBlock]:
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    q, hn = n // 4, n // 2

    blocks = [
        B.block(
            "S",
            [E(a(t), a(-t)) for t in range(1, q)] + [E(one, ba(q + 1))],
            ba(1),
        )
    ]
    for t in range(q):
        blocks.append(B.block(f"S_{2 * t + 1}", [E(one, a(2 * t + 1))], a(2), ba(0)))
    for s in range(hn):
        blocks.append(B.block(f"S_{2 * s}", [E(one, ba(2 * s))]))
    for r in range(q):
        if r != n // 8:
            blocks.append(B.block(f"S'_{2 * r + 1}", [E(one, ba(2 * r + 1))], a(1)))
    blocks.append(B.block("S*", [E(one, a(hn))]))
    return blocks


def _semidihedral_pieces(B: EdgeBuilder, n: int) -> dict[str, list[Edge]]:
    a, ba, E = B.a, B.ba, B.edge
    one, b = a(0), ba(0)
    q, hn = n // 4, n // 2

    r1 = [E(one, ba(q + 1)), E(b, a(q - 1))]
    for t in range(1, q):
        r1 += [E(one, a(2 * t)), E(b, ba(hn + 2 * t))]

    r2: list[Edge] = []
    for t in range(q):
        r2 += [E(one, a(2 * t + 1)), E(ba(1), ba(hn - 2 * t))]

    r3 = [E(a(hn + q - 2), ba(q - 2))]
    r3 += [E(a(hn + 1), ba(2 * t + 1)) for t in range(1, hn)]

    if n == 8:
        r4 = [E(ba(7), a(6)), E(a(7), ba(4))]
    else:
        r4 = []
        for r in range(q - 1):
            if r != n // 8:
                r4 += [E(ba(n - 1), a(n - 2 * r - 2)), E(a(hn + 2 * r + 3), ba(4 * r + 4))]
        r4 += [E(ba(n - 1), a(hn)), E(a(hn + q + 3), ba(hn + q + 2))]
    return {"R_1": r1, "R_2": r2, "R_3": r3, "R_4": r4}


def _modular_starter(B: EdgeBuilder, n: int) -> list[StarterBlock]:
    a, ba, E = B.a, B.ba, B.edge
    one = a(0)
    q, hn, eighth = n // 4, n // 2, n // 8

    edges = [E(a(t), a(hn - t - 1)) for t in range(q)]
    edges += [E(a(hn + s), a(n - s)) for s in range(1, q)]
    edges.append(E(a(3 * q), ba(hn)))
    blocks = [B.block("S", edges, ba(0))]

    odd = [*range(eighth), *range(q, q + eighth)]
    for t in odd:
        blocks.append(B.block(f"S_{2 * t + 1}", [E(one, ba(2 * t + 1))], a(1)))
    for s in range(1, q):
        if s != eighth:
            blocks.append(B.block(f"S_{2 * s}", [E(one, ba(2 * s))], a(1)))
    blocks += [
        B.block("S*_1", [E(one, ba(0))]),
        B.block("S*_2", [E(one, ba(hn))]),
        B.block("S*", [E(one, a(hn))]),
    ]
    return blocks


def _modular_pieces(B: EdgeBuilder, n: int) -> dict[str, list[Edge]]:
    a, ba, E = B.a, B.ba, B.edge
    one, b = a(0), ba(0)
    q, hn, eighth = n // 4, n // 2, n // 8

    r1 = [E(b, a(q)), E(ba(hn), a(q))]
    for s in range(1, q):
        r1 += [E(one, a(hn - 2 * s)), E(ba(q), ba(3 * q - 2 * s))]
    for t in range(q):
        r1 += [E(one, a(hn - 2 * t - 1)), E(ba(q), ba(q - 2 * t - 1))]

    # empty when n = 8
    r2: list[Edge] = []
    for i in range(1, eighth):
        r2 += [
            E(ba(hn), a(3 * q + 2 * i)),
            E(ba(hn), a(hn + 2 * i)),
            E(a(3 * q), ba(2 * i)),
            E(a(3 * q), ba(3 * q + 2 * i)),
        ]

    r3: list[Edge] = []
    for i in range(eighth):
        r3 += [
            E(a(hn), ba(hn + 2 * i + 1)),
            E(b, a(hn + 2 * i + 1)),
            E(ba(hn), a(3 * q + 2 * i + 1)),
            E(a(hn), ba(q + 2 * i + 1)),
        ]

    r4 = [E(a(3 * q), ba(3 * q)), E(b, a(hn))]
    return {"R_1": r1, "R_2": r2, "R_3": r3, "R_4": r4}
