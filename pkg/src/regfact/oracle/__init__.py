"""Independent brute-force checks for small instances."""

from regfact.oracle.brute import (
    AXIOM_CHECK_LIMIT,
    exhaustive_group_axiom_check,
    exhaustive_starter_search,
    recount_partition,
    starter_in,
)
from regfact.oracle.models import PartitionRecount, SearchBudget, SearchResult

__all__ = [
    "AXIOM_CHECK_LIMIT",
    "PartitionRecount",
    "SearchBudget",
    "SearchResult",
    "exhaustive_group_axiom_check",
    "exhaustive_starter_search",
    "recount_partition",
    "starter_in",
]
