"""Student-discovered Rascal patterns and the Pascal hockey stick.

All checks are exact integer identities.  Average claims are restated as
multiples: an odd ring of 8m cells sums to 8m times its centre; an even ring
of 8m - 4 cells sums to (2m - 1) times the inner four-cell diamond.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .errors import GeometryError, PatternApplicabilityError, PositionError
from .triangle import Cell, Triangle

_DIRECTIONS = ((1, 0), (1, 1), (-1, 0), (-1, -1))


@dataclass(frozen=True)
class Counterexample:
    cell: Cell
    expected: int
    found: int
    note: str = ""

    def __str__(self) -> str:
        line = f"cell {self.cell}: expected {self.expected}, found {self.found}"
        return f"{line} ({self.note})" if self.note else line


@dataclass
class PatternReport:
    pattern: str
    holds: bool
    counterexamples: list[Counterexample] = field(default_factory=list)
    cells_checked: int = 0

    def render(self, limit: int | None = None) -> str:
        verdict = "PASS" if self.holds else "FAIL"
        lines = [f"{verdict} {self.pattern}: {self.cells_checked} checked, "
                 f"{len(self.counterexamples)} counterexamples"]
        shown = self.counterexamples if limit is None else self.counterexamples[:limit]
        lines += [str(c) for c in shown]
        if len(shown) < len(self.counterexamples):
            lines.append(f"... {len(self.counterexamples) - len(shown)} more")
        return "\n".join(lines)


def _report(pattern: str, checks: Iterator[tuple[Cell, int, int, str]]) -> PatternReport:
    bad, count = [], 0
    for cell, expected, found, note in checks:
        count += 1
        if expected != found:
            bad.append(Counterexample(cell, expected, found, note))
    return PatternReport(pattern, not bad, bad, count)


# -- T-Meg -----------------------------------------------------------------

def tmeg_applicable(n: int, k: int) -> bool:
    return n >= 3 and 1 <= k <= n - 1


def tmeg_predict(t: Triangle, south) -> int:
    """North plus the first two entries of North's row."""
    n, k = south
    if not tmeg_applicable(n, k):
        raise PatternApplicabilityError(f"T-Meg needs n >= 3 and 1 <= k <= n-1, got ({n},{k})")
    return t.entry(n - 2, k - 1) + t.entry(n - 2, 0) + t.entry(n - 2, 1)


def tmeg_verify(t: Triangle) -> PatternReport:
    def checks():
        for n in range(3, len(t)):
            for k in range(1, n):
                yield Cell(n, k), tmeg_predict(t, (n, k)), t.entry(n, k), ""
    return _report("tmeg", checks())


# -- Ashley ----------------------------------------------------------------
# NW sits three rows up and one column left of South; the diagonal factor on
# the constant-column diagonal k is k - 2.

def ashley_applicable(n: int, k: int) -> bool:
    return n >= 3 and 1 <= k <= n - 2


def ashley_predict(t: Triangle, south) -> int:
    n, k = south
    if not ashley_applicable(n, k):
        raise PatternApplicabilityError(f"Ashley's rule needs n >= 3 and 1 <= k <= n-2, got ({n},{k})")
    west, east = t.entry(n - 1, k - 1), t.entry(n - 1, k)
    nw = t.entry(n - 3, k - 1)
    return west + east - nw - (k - 2)


def ashley_verify(t: Triangle) -> PatternReport:
    def checks():
        for n in range(3, len(t)):
            for k in range(1, n - 1):
                yield Cell(n, k), ashley_predict(t, (n, k)), t.entry(n, k), ""
    return _report("ashley", checks())


# -- Diamond rings ---------------------------------------------------------

class RingKind(str, Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class RingSpec:
    """Odd rings are centred on ``anchor``; even rings surround the 2x2
    diamond whose top (North) cell is ``anchor``.  Level 1 of an even ring is
    that inner diamond itself."""

    kind: RingKind
    anchor: Cell
    level: int

    def __post_init__(self):
        object.__setattr__(self, "kind", RingKind(self.kind))
        if not isinstance(self.anchor, Cell):
            object.__setattr__(self, "anchor", Cell(*self.anchor))
        if self.level < 1:
            raise ValueError(f"ring level must be >= 1, got {self.level}")

    @property
    def size(self) -> int:
        return 8 * self.level if self.kind is RingKind.ODD else 8 * self.level - 4

    @property
    def top(self) -> tuple[int, int]:
        n, k = self.anchor
        m = self.level
        if self.kind is RingKind.ODD:
            return n - 2 * m, k - m
        return n - 2 * (m - 1), k - (m - 1)

    @property
    def side_steps(self) -> int:
        return 2 * self.level if self.kind is RingKind.ODD else 2 * self.level - 1


def _walk(spec: RingSpec) -> list[tuple[int, int]]:
    r, c = spec.top
    out = []
    for dr, dc in _DIRECTIONS:
        for _ in range(spec.side_steps):
            out.append((r, c))
            r, c = r + dr, c + dc
    return out


def ring_cells(spec: RingSpec, num_rows: int | None = None) -> list[Cell]:
    """Boundary cells clockwise from the top corner: down the left-hand side,
    down-right, back up, then up-left to close.

    Every cell must satisfy 0 <= col <= row and, when ``num_rows`` is given,
    row < num_rows; the first offender raises GeometryError.
    """
    cells = []
    for r, c in _walk(spec):
        if not (0 <= c <= r) or (num_rows is not None and r >= num_rows):
            raise GeometryError((r, c), f"{spec.kind.value} ring at {spec.anchor} level {spec.level}: "
                                        f"cell ({r},{c}) lies outside the triangle")
        cells.append(Cell(r, c))
    return cells


def inner_diamond(apex) -> list[Cell]:
    n, k = apex
    return [Cell(n, k), Cell(n + 1, k), Cell(n + 2, k + 1), Cell(n + 1, k + 1)]


def ring_values(t: Triangle, spec: RingSpec) -> list[int]:
    return [t.entry(c.row, c.col) for c in ring_cells(spec, len(t))]


def ring_fits(spec: RingSpec, num_rows: int) -> bool:
    """Whether the four corners, and hence the whole ring, lie inside."""
    r, c = spec.top
    s = spec.side_steps
    corners = [(r, c), (r + s, c), (r + 2 * s, c + s), (r + s, c + s)]
    return all(0 <= cc <= rr < num_rows for rr, cc in corners)


@dataclass(frozen=True)
class DiamondResult:
    spec: RingSpec
    ring_sum: int
    expected: int
    holds: bool

    def __str__(self) -> str:
        verdict = "PASS" if self.holds else "FAIL"
        return (f"{verdict} {self.spec.kind.value} ring at {self.spec.anchor} level {self.spec.level}: "
                f"{self.spec.size} cells, sum {self.ring_sum}, expected {self.expected}")


def odd_diamond_check(t: Triangle, center, level: int) -> DiamondResult:
    spec = RingSpec(RingKind.ODD, center, level)
    total = sum(ring_values(t, spec))
    expected = 8 * level * t.entry(spec.anchor.row, spec.anchor.col)
    return DiamondResult(spec, total, expected, total == expected)


def even_diamond_check(t: Triangle, apex, level: int) -> DiamondResult:
    if level < 2:
        raise PatternApplicabilityError(f"even ring level must be >= 2, got {level}")
    spec = RingSpec(RingKind.EVEN, apex, level)
    total = sum(ring_values(t, spec))
    inner = inner_diamond(spec.anchor)
    for c in inner:
        if not t.contains(c.row, c.col):
            raise GeometryError(c)
    inner_sum = sum(t.entry(c.row, c.col) for c in inner)
    expected = (2 * level - 1) * inner_sum
    return DiamondResult(spec, total, expected, total == expected)


def valid_rings(kind: RingKind, num_rows: int) -> Iterator[RingSpec]:
    """Every (anchor, level) whose ring fits in ``num_rows`` rows, row-major by anchor."""
    kind = RingKind(kind)
    min_level = 1 if kind is RingKind.ODD else 2
    for n in range(num_rows):
        for k in range(n + 1):
            m = min_level
            while True:
                spec = RingSpec(kind, Cell(n, k), m)
                if not ring_fits(spec, num_rows):
                    # rings grow monotonically, so a larger level cannot fit either
                    break
                yield spec
                m += 1


def _diamond_verify(t: Triangle, kind: RingKind, check) -> PatternReport:
    name = f"{kind.value}-diamond"

    def checks():
        for spec in valid_rings(kind, len(t)):
            res = check(t, spec.anchor, spec.level)
            yield spec.anchor, res.expected, res.ring_sum, f"level {spec.level}"
    return _report(name, checks())


def odd_diamond_verify(t: Triangle) -> PatternReport:
    return _diamond_verify(t, RingKind.ODD, odd_diamond_check)


def even_diamond_verify(t: Triangle) -> PatternReport:
    return _diamond_verify(t, RingKind.EVEN, even_diamond_check)


# -- Pascal hockey stick ---------------------------------------------------

def hockey_stick_check(t: Triangle, start_row: int, length: int) -> bool:
    """Sum of the diagonal run (start_row + i, i), i < length, against the
    entry just below-right of its last cell, (start_row + length, length - 1)."""
    if length < 1 or start_row < 0:
        raise PositionError(f"hockey stick needs start_row >= 0 and length >= 1")
    end = (start_row + length, length - 1)
    if not t.contains(*end):
        raise PositionError(f"hockey stick ending at {end} exceeds {len(t)} rows")
    total = sum(t.entry(start_row + i, i) for i in range(length))
    return total == t.entry(*end)
