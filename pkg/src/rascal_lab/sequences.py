"""Diagonal extraction, arithmetic-progression detection, and 3a + 5b."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import InsufficientDataError, PositionError
from .triangle import Triangle


class DiagonalFamily(str, Enum):
    CONSTANT_COL = "constant-col"
    CONSTANT_ANTI = "constant-anti"  # constant row - col


@dataclass(frozen=True)
class APProfile:
    start: int
    difference: int

    def term(self, i: int) -> int:
        return self.start + i * self.difference


def diagonal(t: Triangle, family: DiagonalFamily | str, index: int) -> list[int]:
    """All stored cells of one diagonal, apex side first.

    ``constant-col`` index c walks (c, c), (c+1, c), ...; ``constant-anti``
    index d walks (d, 0), (d+1, 1), ....
    """
    family = DiagonalFamily(family)
    if not 0 <= index < len(t):
        raise PositionError(f"diagonal index {index} outside triangle with {len(t)} rows")
    if family is DiagonalFamily.CONSTANT_COL:
        return [t.entry(n, index) for n in range(index, len(t))]
    return [t.entry(index + i, i) for i in range(len(t) - index)]


def ap_profile(seq: Sequence[int]) -> APProfile | None:
    if len(seq) < 2:
        raise InsufficientDataError(f"need at least 2 terms to detect a progression, got {len(seq)}")
    d = seq[1] - seq[0]
    if any(b - a != d for a, b in zip(seq, seq[1:])):
        return None
    return APProfile(seq[0], d)


def representable_values(a_coef: int = 3, b_coef: int = 5, limit: int = 20) -> tuple[set[int], list[int]]:
    """Values 0..limit of the form a_coef*a + b_coef*b with a, b >= 0,
    and the sorted list of those that are not."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if a_coef < 1 or b_coef < 1:
        raise ValueError("coefficients must be positive")
    reachable = set()
    for a in range(limit // a_coef + 1):
        for b in range((limit - a * a_coef) // b_coef + 1):
            reachable.add(a * a_coef + b * b_coef)
    return reachable, [v for v in range(limit + 1) if v not in reachable]
