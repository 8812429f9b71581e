"""Three-way comparison result shared by the codec and ordinal modules."""

from __future__ import annotations

import enum


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1

    @staticmethod
    def from_cmp(c: int) -> "Ordering":
        if c < 0:
            return Ordering.LT
        if c > 0:
            return Ordering.GT
        return Ordering.EQ
