"""Normal-form arithmetic for groups with a cyclic subgroup of index two.

Every supported group is generated by ``a`` (of order ``m``) and ``b`` subject to

    b^-1 a b = a^sigma,    b^2 = a^beta,

so each element has exactly one normal form ``b^eps a^k`` with ``eps`` in {0, 1}
and ``0 <= k < m``. Multiplication only needs the two family constants::

    family          m      sigma       beta
    dicyclic(s)     2s     -1          s
    abelian(n)      n      1           0
    semidihedral(n) n      n/2 - 1     0
    modular(n)      n      n/2 + 1     0
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional

from regfact.core.errors import (
    ArtifactFormatError,
    ContractViolationError,
    UnsupportedParameterError,
)


class FamilyKind(str, Enum):
    """Supported group families."""

    DICYCLIC = "dicyclic"
    ABELIAN = "abelian"
    SEMIDIHEDRAL = "semidihedral"
    MODULAR = "modular"


@dataclass(frozen=True, order=True, slots=True)
class GroupElement:
    """The element b^eps a^k; ordering is (eps, k) lexicographic."""

    eps: int
    k: int

    def __str__(self) -> str:
        return format_element(self)


def format_element(g: GroupElement) -> str:
    """Render an element as ``1``, ``a``, ``a^k``, ``b``, ``b*a`` or ``b*a^k``."""
    if g.eps == 0:
        if g.k == 0:
            return "1"
        return "a" if g.k == 1 else f"a^{g.k}"
    if g.k == 0:
        return "b"
    return "b*a" if g.k == 1 else f"b*a^{g.k}"


def _is_power_of_two(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0


def _check_parameter(kind: FamilyKind, param: int) -> None:
    if isinstance(param, bool) or not isinstance(param, int):
        raise UnsupportedParameterError(f"{kind.value} parameter must be an integer, got {param!r}")
    if kind is FamilyKind.DICYCLIC:
        if param < 2:
            raise UnsupportedParameterError(
                f"dicyclic groups need s >= 2 (order 4s), got s={param}"
            )
    elif kind is FamilyKind.ABELIAN:
        if param < 4 or param % 4 != 0:
            raise UnsupportedParameterError(
                f"abelian Z2 x Zn needs n >= 4 with 4 | n, got n={param}"
            )
    elif param < 8 or not _is_power_of_two(param):
        raise UnsupportedParameterError(
            f"{kind.value} groups need n a power of two >= 8, got n={param}"
        )


@dataclass(frozen=True)
class Subgroup:
    """A subgroup stored as its sorted element tuple plus the generators it came from."""

    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]

    @cached_property
    def element_set(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.element_set

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class GroupFamily:
    """One concrete group from a supported family.

    Instances are immutable; element tables are computed lazily and cached.
    """

    kind: FamilyKind
    param: int

    def __post_init__(self) -> None:
        if not isinstance(self.kind, FamilyKind):
            try:
                object.__setattr__(self, "kind", FamilyKind(self.kind))
            except ValueError as exc:
                raise UnsupportedParameterError(f"unknown group family {self.kind!r}") from exc
        _check_parameter(self.kind, self.param)

    @classmethod
    def dicyclic(cls, s: int) -> "GroupFamily":
        return cls(FamilyKind.DICYCLIC, s)

    @classmethod
    def abelian(cls, n: int) -> "GroupFamily":
        return cls(FamilyKind.ABELIAN, n)

    @classmethod
    def semidihedral(cls, n: int) -> "GroupFamily":
        return cls(FamilyKind.SEMIDIHEDRAL, n)

    @classmethod
    def modular(cls, n: int) -> "GroupFamily":
        return cls(FamilyKind.MODULAR, n)

    @classmethod
    def from_name(cls, name: str, param: int) -> "GroupFamily":
        """Build a group from its CLI family name."""
        try:
            kind = FamilyKind(name.strip().lower())
        except ValueError as exc:
            choices = ", ".join(k.value for k in FamilyKind)
            raise UnsupportedParameterError(
                f"unknown group family {name!r} (expected one of: {choices})"
            ) from exc
        return cls(kind, param)

    # -- family constants -------------------------------------------------

    @property
    def cyclic_order(self) -> int:
        """Order of the generator a."""
        if self.kind is FamilyKind.DICYCLIC:
            return 2 * self.param
        return self.param

    @property
    def order(self) -> int:
        return 2 * self.cyclic_order

    @property
    def half_order(self) -> int:
        """The n of K_2n."""
        return self.cyclic_order

    @property
    def sigma(self) -> int:
        m = self.cyclic_order
        if self.kind is FamilyKind.DICYCLIC:
            return m - 1
        if self.kind is FamilyKind.SEMIDIHEDRAL:
            return m // 2 - 1
        if self.kind is FamilyKind.MODULAR:
            return m // 2 + 1
        return 1

    @property
    def beta(self) -> int:
        return self.param if self.kind is FamilyKind.DICYCLIC else 0

    @property
    def label(self) -> str:
        """Short human-readable name such as ``Dic(s=3)`` or ``Q8``."""
        if self.kind is FamilyKind.DICYCLIC:
            return "Q8" if self.param == 2 else f"Dic(s={self.param})"
        if self.kind is FamilyKind.ABELIAN:
            return f"Z2xZ{self.param}"
        if self.kind is FamilyKind.SEMIDIHEDRAL:
            return f"SD(n={self.param})"
        return f"M(n={self.param})"

    # -- elements ---------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0, 0)

    @property
    def b(self) -> GroupElement:
        return GroupElement(1, 0)

    def a(self, k: int = 1) -> GroupElement:
        """The element a^k, exponent reduced modulo ord(a)."""
        return GroupElement(0, k % self.cyclic_order)

    def ba(self, k: int = 0) -> GroupElement:
        """The element b*a^k, exponent reduced modulo ord(a)."""
        return GroupElement(1, k % self.cyclic_order)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in the canonical total order."""
        m = self.cyclic_order
        return tuple(GroupElement(eps, k) for eps in (0, 1) for k in range(m))

    @cached_property
    def index_of(self) -> dict[GroupElement, int]:
        """Position of each element in the total order."""
        return {g: i for i, g in enumerate(self.elements)}

    def contains(self, g: object) -> bool:
        return (
            isinstance(g, GroupElement)
            and g.eps in (0, 1)
            and 0 <= g.k < self.cyclic_order
        )

    def require(self, *elements: GroupElement) -> None:
        """Raise ContractViolationError unless every element is a normal form of this group."""
        for g in elements:
            if not self.contains(g):
                raise ContractViolationError(f"{g!r} is not a normal form in {self.label}")

    # -- arithmetic -------------------------------------------------------

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Normal form of g*h.

        Uses a^k b = b a^(sigma k) to move b left, then b^2 = a^beta.
        """
        self.require(g, h)
        m = self.cyclic_order
        if h.eps == 0:
            return GroupElement(g.eps, (g.k + h.k) % m)
        twisted = (self.sigma * g.k + h.k) % m
        if g.eps == 0:
            return GroupElement(1, twisted)
        return GroupElement(0, (self.beta + twisted) % m)

    def inv(self, g: GroupElement) -> GroupElement:
        self.require(g)
        m = self.cyclic_order
        if g.eps == 0:
            return GroupElement(0, -g.k % m)
        return GroupElement(1, (-self.beta - self.sigma * g.k) % m)

    def power(self, g: GroupElement, exponent: int) -> GroupElement:
        result = self.identity
        base = g if exponent >= 0 else self.inv(g)
        for _ in range(abs(exponent)):
            result = self.mul(result, base)
        return result

    def involutions(self) -> tuple[GroupElement, ...]:
        """All elements of order two, in the total order."""
        e = self.identity
        return tuple(g for g in self.elements if g != e and self.mul(g, g) == e)

    # -- subgroups and cosets ---------------------------------------------

    def subgroup(self, *gens: GroupElement) -> Subgroup:
        """Smallest subgroup containing ``gens``."""
        if not gens:
            raise ContractViolationError("subgroup_generate needs at least one generator")
        self.require(*gens)
        closure = {self.identity}
        frontier = [self.identity]
        # right multiplication by generators reaches the whole subgroup in a finite group
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        return Subgroup(elements=tuple(sorted(closure)), generators=tuple(gens))

    def whole(self) -> Subgroup:
        return self.subgroup(self.a(1), self.b)

    def trivial(self) -> Subgroup:
        return self.subgroup(self.identity)

    def cyclic_subgroup(self) -> Subgroup:
        """The index-two cyclic subgroup <a>."""
        return self.subgroup(self.a(1))

    def central_involution(self) -> GroupElement:
        """The unique involution a^(m/2) of <a>."""
        return self.a(self.cyclic_order // 2)

    def is_left_transversal(self, reps: Iterable[GroupElement], H: Subgroup) -> bool:
        """True iff the left cosets x*H, x in ``reps``, are pairwise disjoint and cover G.

        ``reps`` is read as a multiset, so a repeated element makes it fail.
        """
        reps = list(reps)
        if len(reps) * H.order != self.order:
            return False
        covered: set[GroupElement] = set()
        for x in reps:
            coset = {self.mul(x, h) for h in H.elements}
            if not covered.isdisjoint(coset):
                return False
            covered |= coset
        return len(covered) == self.order

    def right_coset_representatives(self, H: Subgroup) -> tuple[GroupElement, ...]:
        """Smallest element of every right coset H*g, sorted."""
        seen: set[GroupElement] = set()
        reps: list[GroupElement] = []
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(self.mul(h, g) for h in H.elements)
        return tuple(reps)

    # -- text form --------------------------------------------------------

    def parse_element(self, text: str) -> GroupElement:
        """Parse ``1``, ``a``, ``a^k``, ``b``, ``ba^k`` or ``b*a^k``; k may be negative."""
        raw = text
        s = text.strip().replace(" ", "").replace("·", "*")
        if s == "1":
            return self.identity
        eps = 0
        if s.startswith("b"):
            eps = 1
            s = s[1:]
            if s.startswith("*"):
                s = s[1:]
            if not s:
                return self.ba(0)
        k = _parse_a_power(s, raw)
        return GroupElement(eps, k % self.cyclic_order)

    def __str__(self) -> str:
        return self.label


def _parse_a_power(s: str, raw: str) -> int:
    if not s.startswith("a"):
        raise ArtifactFormatError(f"cannot parse group element {raw!r}")
    rest = s[1:]
    if not rest:
        return 1
    if not rest.startswith("^"):
        raise ArtifactFormatError(f"cannot parse group element {raw!r}")
    try:
        return int(rest[1:])
    except ValueError as exc:
        raise ArtifactFormatError(f"cannot parse group element {raw!r}") from exc


def family_of(kind: str | FamilyKind, param: int, max_order: Optional[int] = None) -> GroupFamily:
    """Build a group and enforce an optional order cap."""
    group = GroupFamily.from_name(kind.value if isinstance(kind, FamilyKind) else kind, param)
    if max_order is not None and group.order > max_order:
        raise UnsupportedParameterError(
            f"{group.label} has order {group.order}, above the configured cap {max_order}"
        )
    return group
