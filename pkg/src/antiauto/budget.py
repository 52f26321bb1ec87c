"""Search budgets shared by the counting, enumeration and decision modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SearchBudget:
    """Caps for exhaustive operations.

    ``max_group_order`` bounds the order of groups a search will touch;
    ``max_solutions`` optionally truncates enumeration streams.
    """

    max_group_order: int = 16
    max_solutions: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_group_order < 1:
            raise ValueError("max_group_order must be positive")
        if self.max_solutions is not None and self.max_solutions < 1:
            raise ValueError("max_solutions must be positive when given")


#: Default for full antiautomorphism counts (search cost grows super-exponentially).
DEFAULT_COUNT_BUDGET = SearchBudget(max_group_order=16)

#: Default for existence-only search and automorphism enumeration.
DEFAULT_EXISTENCE_BUDGET = SearchBudget(max_group_order=64)
