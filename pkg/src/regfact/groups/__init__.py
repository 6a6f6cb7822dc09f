"""Group arithmetic for the supported families."""

from regfact.groups.family import (
    FamilyKind,
    GroupElement,
    GroupFamily,
    Subgroup,
    family_of,
    format_element,
)

__all__ = [
    "FamilyKind",
    "GroupElement",
    "GroupFamily",
    "Subgroup",
    "family_of",
    "format_element",
]
