"""Starters, their validation and their expansion into 1-factorizations."""

from regfact.starters.engine import (
    expand_block,
    expand_starter,
    factor_of,
    factorization_from_factors,
    validate_starter,
    verify_factorization,
)
from regfact.starters.models import Factorization, Starter, StarterBlock

__all__ = [
    "Factorization",
    "Starter",
    "StarterBlock",
    "expand_block",
    "expand_starter",
    "factor_of",
    "factorization_from_factors",
    "validate_starter",
    "verify_factorization",
]
