"""Core module initialization."""

from regfact.core.errors import (
    ArtifactFormatError,
    ConstructionIntegrityError,
    ContractViolationError,
    RegFactError,
    UnsupportedParameterError,
)
from regfact.core.models import Condition, VerificationReport, Violation

__all__ = [
    "ArtifactFormatError",
    "Condition",
    "ConstructionIntegrityError",
    "ContractViolationError",
    "RegFactError",
    "UnsupportedParameterError",
    "VerificationReport",
    "Violation",
]
