"""Explicit starters and base graphs for the four supported families."""

from regfact.constructions.abelian import build_abelian
from regfact.constructions.base import (
    Construction,
    ConstructionRegistry,
    EdgeBuilder,
    finalize,
)
from regfact.constructions.dicyclic import build_dicyclic
from regfact.constructions.two_groups import build_modular, build_semidihedral
from regfact.groups.family import FamilyKind
from regfact.rainbow.models import LemmaOneInput

registry = ConstructionRegistry()
registry.register(FamilyKind.DICYCLIC, build_dicyclic)
registry.register(FamilyKind.ABELIAN, build_abelian)
registry.register(FamilyKind.SEMIDIHEDRAL, build_semidihedral)
registry.register(FamilyKind.MODULAR, build_modular)


def build_construction(kind: FamilyKind | str, param: int) -> Construction:
    """Build and certify the construction for one family member.

    Raises:
        UnsupportedParameterError: Unknown family or parameter outside its range
        ConstructionIntegrityError: If the output fails verification
    """
    return registry.build(kind, param)


__all__ = [
    "Construction",
    "ConstructionRegistry",
    "EdgeBuilder",
    "LemmaOneInput",
    "build_abelian",
    "build_construction",
    "build_dicyclic",
    "build_modular",
    "build_semidihedral",
    "finalize",
    "registry",
]
