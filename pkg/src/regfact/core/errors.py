"""Exception hierarchy for regfact."""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from regfact.core.models import VerificationReport


class RegFactError(Exception):
    """Base exception for regfact errors."""

    pass


class UnsupportedParameterError(RegFactError, ValueError):
    """Raised when a family parameter lies outside the supported range."""

    pass


class ContractViolationError(RegFactError):
    """Raised when an operation is called with inputs breaking its precondition."""

    pass


class ArtifactFormatError(RegFactError, ValueError):
    """Raised when an exported artifact or element string cannot be parsed."""

    pass


class ConstructionIntegrityError(RegFactError):
    """Raised when an emitted object fails its own verification.

    The failing report is attached so callers can render the violated
    conditions instead of a bare message.
    """

    def __init__(self, message: str, report: Optional["VerificationReport"] = None) -> None:
        super().__init__(message)
        self.report = report

    def __str__(self) -> str:
        base = super().__str__()
        if self.report is None or not self.report.violations:
            return base
        first = self.report.violations[0]
        return f"{base}: {first}"
