"""Budgets and results of the brute-force oracle."""

from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from regfact.core.models import Condition, VerificationReport
from regfact.graph.edges import Edge, format_edge

if TYPE_CHECKING:
    from regfact.config import SearchSettings
    from regfact.starters.models import Starter

# beyond this the search tree explodes factorially
SEARCH_ORDER_CEILING = 16


class SearchBudget(BaseModel):
    """Limits for :func:`exhaustive_starter_search`."""

    max_group_order: int = Field(
        SEARCH_ORDER_CEILING, ge=1, le=SEARCH_ORDER_CEILING, description="Largest |G| searched"
    )
    max_nodes: int = Field(1_000_000, ge=0, description="Backtracking node cap")

    @classmethod
    def from_settings(cls, settings: "SearchSettings") -> "SearchBudget":
        return cls(max_group_order=settings.max_group_order, max_nodes=settings.max_nodes)


@dataclass
class SearchResult:
    """Starters found before the search ended; ``complete`` is False if the budget ran out.

    Each block sits with its least difference on [1, d], so ``starters`` holds one
    representative per translation class. Use :func:`starter_in` to look one up.
    """

    starters: list["Starter"] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0


@dataclass
class PartitionRecount:
    """Multiplicity of every edge of K_2n across a tree list."""

    subject: str
    counts: Counter[Edge]
    duplicated: list[Edge]
    missing: list[Edge]

    @property
    def passed(self) -> bool:
        return not self.duplicated and not self.missing

    def to_report(self) -> VerificationReport:
        report = VerificationReport(subject=self.subject)
        report.record(Condition.ORACLE_RECOUNT)
        if self.duplicated:
            report.fail(
                Condition.ORACLE_RECOUNT,
                f"{len(self.duplicated)} edge(s) counted more than once",
                witnesses=[format_edge(e) for e in self.duplicated[:10]],
            )
        if self.missing:
            report.fail(
                Condition.ORACLE_RECOUNT,
                f"{len(self.missing)} edge(s) counted zero times",
                witnesses=[format_edge(e) for e in self.missing[:10]],
            )
        return report
