"""Tri-state answers with machine-checkable evidence.

Yes and No always carry evidence objects; Unknown records how much of
the budget was consumed.  Search operations across the package return
these rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TriState:
    status: str
    evidence: Any = None
    tried: int = 0

    @property
    def is_yes(self) -> bool:
        return self.status == YES

    @property
    def is_no(self) -> bool:
        return self.status == NO

    @property
    def is_unknown(self) -> bool:
        return self.status == UNKNOWN

    @staticmethod
    def yes(evidence, tried: int = 0) -> "TriState":
        return TriState(YES, evidence, tried)

    @staticmethod
    def no(evidence, tried: int = 0) -> "TriState":
        return TriState(NO, evidence, tried)

    @staticmethod
    def unknown(tried: int = 0) -> "TriState":
        return TriState(UNKNOWN, None, tried)
