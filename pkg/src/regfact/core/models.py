"""Structured verification reports shared by every checker."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class Condition(str, Enum):
    """Stable identifiers of the conditions regfact checks."""

    # starter definition
    STARTER_DIFFERENCES = "starter.differences"
    STARTER_TRANSVERSAL = "starter.transversal"
    STARTER_INVOLUTIONS = "starter.involutions"

    # 1-factorization
    FACTORIZATION_COUNT = "factorization.count"
    FACTORIZATION_MATCHING = "factorization.matching"
    FACTORIZATION_PARTITION = "factorization.partition"
    FACTORIZATION_REGULARITY = "factorization.regularity"
    FACTORIZATION_EXPANSION = "factorization.expansion"
    FACTORIZATION_BLOCKS = "factorization.blocks"  # exported block_of

    # base graph and bridge edges
    LEMMA_INPUT = "lemma.input"
    LEMMA_FACTORS = "lemma.factors"  # one edge of R per non-fixed factor
    LEMMA_PAIRING = "lemma.pairing"  # long edges pair across H-orbits
    LEMMA_BRIDGES = "lemma.bridges"  # bridge orbits and connectivity
    LEMMA_PIECES = "lemma.pieces"  # named parts of R

    # assembled tree set
    TREES_COUNT = "trees.count"
    TREES_SIZE = "trees.size"
    TREES_SPANNING = "trees.spanning"
    TREES_RAINBOW = "trees.rainbow"
    TREES_PARTITION = "trees.partition"
    TREES_PROVENANCE = "trees.provenance"  # T1, T2, transversal and their translates

    # group axioms
    GROUP_CLOSURE = "group.closure"
    GROUP_IDENTITY = "group.identity"
    GROUP_INVERSE = "group.inverse"
    GROUP_ASSOCIATIVITY = "group.associativity"
    GROUP_RELATIONS = "group.relations"
    GROUP_INVOLUTIONS = "group.involutions"
    GROUP_REGULAR_ACTION = "group.regular_action"

    ORACLE_RECOUNT = "oracle.recount"


class Violation(BaseModel):
    """A single failed condition with its witnesses."""

    condition: Condition = Field(..., description="Violated condition")
    message: str = Field(..., description="Human-readable explanation")
    block: Optional[int] = Field(None, description="Starter block index, if any", ge=0)
    tree: Optional[int] = Field(None, description="Tree index, if any", ge=0)
    witnesses: list[str] = Field(
        default_factory=list, description="Offending elements, edges or factor indices"
    )

    def __str__(self) -> str:
        """String representation of the violation."""
        where = ""
        if self.block is not None:
            where = f" (block {self.block})"
        elif self.tree is not None:
            where = f" (tree {self.tree})"
        return f"[{self.condition.value}]{where} {self.message}"


class VerificationReport(BaseModel):
    """Outcome of one or more checks over a single subject."""

    subject: str = Field(..., description="What was checked")
    checked: list[Condition] = Field(default_factory=list)
    violations: list[Violation] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Whether every evaluated condition held."""
        return not self.violations

    def record(self, condition: Condition) -> None:
        """Mark a condition as evaluated."""
        if condition not in self.checked:
            self.checked.append(condition)

    def fail(
        self,
        condition: Condition,
        message: str,
        *,
        block: Optional[int] = None,
        tree: Optional[int] = None,
        witnesses: Optional[list[str]] = None,
    ) -> Violation:
        """Record a violation and return it."""
        self.record(condition)
        violation = Violation(
            condition=condition,
            message=message,
            block=block,
            tree=tree,
            witnesses=list(witnesses or []),
        )
        self.violations.append(violation)
        return violation

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Fold another report into this one."""
        for condition in other.checked:
            self.record(condition)
        self.violations.extend(other.violations)
        return self

    def violated_conditions(self) -> set[Condition]:
        """Conditions with at least one violation."""
        return {v.condition for v in self.violations}

    def get_violations(self, condition: Condition) -> list[Violation]:
        """Get all violations of a specific condition."""
        return [v for v in self.violations if v.condition == condition]
