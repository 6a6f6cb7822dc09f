"""
regfact - G-regular 1-factorizations of K_2n and complete sets of rainbow spanning trees.

Vertices of the complete graph are the elements of a group with a cyclic
subgroup of index two. A starter in the group expands into a 1-factorization
that the group permutes regularly, and a small base graph R with two bridge
edges expands into n edge-disjoint spanning trees, each meeting every factor
exactly once. Every emitted object is re-verified from first principles.
"""

__version__ = "0.1.0"
__author__ = "regfact developers"

from regfact.core.errors import (
    ArtifactFormatError,
    ConstructionIntegrityError,
    ContractViolationError,
    RegFactError,
    UnsupportedParameterError,
)
from regfact.core.models import Condition, VerificationReport, Violation
from regfact.groups import FamilyKind, GroupElement, GroupFamily, Subgroup

__all__ = [
    "ArtifactFormatError",
    "Condition",
    "ConstructionIntegrityError",
    "ContractViolationError",
    "FamilyKind",
    "GroupElement",
    "GroupFamily",
    "RegFactError",
    "Subgroup",
    "UnsupportedParameterError",
    "VerificationReport",
    "Violation",
    "__version__",
]
