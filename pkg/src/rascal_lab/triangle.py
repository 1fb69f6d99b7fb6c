"""Triangle storage and the Pascal / Rascal generators.

Rows and columns are 0-indexed with the apex at (0, 0).  Every entry is a
Python ``int`` so deep rows never overflow.

The four Rascal constructions are deliberately independent of each other:

* ``build_rascal_diamond``  -- South = (East * West + 1) / North
* ``build_rascal_additive`` -- South = East + West - North + 1
* ``build_rascal_diagonal`` -- constant-column diagonals as arithmetic progressions
* ``rascal_entry``          -- closed form k(n - k) + 1, used as the oracle
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EmptyInputError, IntegralityError, PositionError


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    def __post_init__(self):
        if not (0 <= self.col <= self.row):
            raise PositionError(f"invalid cell ({self.row},{self.col}): need 0 <= col <= row")

    def __iter__(self) -> Iterator[int]:
        yield self.row
        yield self.col

    def __str__(self) -> str:
        return f"({self.row},{self.col})"

    @property
    def is_edge(self) -> bool:
        return self.col == 0 or self.col == self.row


@dataclass(frozen=True)
class DiamondNeighborhood:
    """The four cells of a lattice diamond, named relative to its South cell."""

    south: Cell

    def __post_init__(self):
        n, k = self.south
        if n < 2 or not (1 <= k <= n - 1):
            raise PositionError(f"cell {self.south} has no full diamond above it")

    @property
    def north(self) -> Cell:
        return Cell(self.south.row - 2, self.south.col - 1)

    @property
    def west(self) -> Cell:
        return Cell(self.south.row - 1, self.south.col - 1)

    @property
    def east(self) -> Cell:
        return Cell(self.south.row - 1, self.south.col)


@dataclass(frozen=True)
class Triangle:
    """Immutable dense triangular array of integers with a name tag."""

    name: str
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise PositionError(f"row {n} has {len(r)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def contains(self, row: int, col: int) -> bool:
        return 0 <= row < len(self.rows) and 0 <= col <= row

    def entry(self, row: int, col: int) -> int:
        if not self.contains(row, col):
            raise PositionError(f"cell ({row},{col}) outside triangle {self.name!r} "
                                f"with {len(self.rows)} rows")
        return self.rows[row][col]

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n < len(self.rows):
            raise PositionError(f"row {n} outside triangle {self.name!r} with {len(self.rows)} rows")
        return self.rows[n]

    def cells(self, interior_only: bool = False) -> Iterator[Cell]:
        """Row-major iteration over stored cells."""
        for n in range(len(self.rows)):
            lo, hi = (1, n - 1) if interior_only else (0, n)
            for k in range(lo, hi + 1):
                yield Cell(n, k)

    def truncated(self, num_rows: int) -> "Triangle":
        return Triangle(self.name, self.rows[:num_rows])


def entry(t: Triangle, c) -> int:
    c = tuple(c)
    return t.entry(c[0], c[1])


def row(t: Triangle, n: int) -> tuple[int, ...]:
    return t.row(n)


def _check_rows(num_rows: int) -> None:
    if num_rows < 1:
        raise EmptyInputError(f"num_rows must be >= 1, got {num_rows}")


def build_pascal(num_rows: int) -> Triangle:
    _check_rows(num_rows)
    rows = [[1]]
    for n in range(1, num_rows):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n)] + [1])
    return Triangle("pascal", rows)


def extend_diamond(seed: Triangle, num_rows: int, name: str = "rascal-diamond") -> Triangle:
    """Continue ``seed`` to ``num_rows`` rows with South = (East * West + 1) / North.

    New edges are 1.  Division must be exact at every new interior cell,
    otherwise IntegralityError names the first offending cell.
    """
    _check_rows(num_rows)
    rows: list[list[int]] = [list(r) for r in seed.rows[:num_rows]]
    for n in range(len(rows), num_rows):
        r = [1] * (n + 1)
        for k in range(1, n):
            west, east, north = rows[n - 1][k - 1], rows[n - 1][k], rows[n - 2][k - 1]
            q, rem = divmod(east * west + 1, north)
            if rem:
                raise IntegralityError(
                    Cell(n, k),
                    f"(east*west + 1) = {east * west + 1} not divisible by north = {north} "
                    f"at cell ({n},{k})")
            r[k] = q
        rows.append(r)
    return Triangle(name, rows)


def build_rascal_diamond(num_rows: int) -> Triangle:
    return extend_diamond(Triangle("apex", [[1]]), num_rows)


def build_rascal_additive(num_rows: int) -> Triangle:
    _check_rows(num_rows)
    rows: list[list[int]] = []
    for n in range(num_rows):
        r = [1] * (n + 1)
        for k in range(1, n):
            r[k] = rows[n - 1][k] + rows[n - 1][k - 1] - rows[n - 2][k - 1] + 1
        rows.append(r)
    return Triangle("rascal-additive", rows)


def build_rascal_diagonal(num_rows: int) -> Triangle:
    """Fill constant-column diagonals as arithmetic progressions.

    The diagonal at column c starts with 1 on the right edge at (c, c) and
    grows by c per row going down-left.  Only the left half (2c <= n) is
    filled this way; the right half comes from mirror symmetry, which is what
    makes the constant (row - col) family progressions as well.
    """
    _check_rows(num_rows)
    rows = [[0] * (n + 1) for n in range(num_rows)]
    for c in range((num_rows - 1) // 2 + 1):
        value = 1
        for n in range(c, num_rows):
            if 2 * c <= n:
                rows[n][c] = value
            value += c
    for n in range(num_rows):
        for k in range(n // 2 + 1, n + 1):
            rows[n][k] = rows[n][n - k]
    return Triangle("rascal-diagonal", rows)


def rascal_entry(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise PositionError(f"cell ({n},{k}) is not in any triangle: need 0 <= k <= n")
    return k * (n - k) + 1


def build_rascal_closed_form(num_rows: int) -> Triangle:
    _check_rows(num_rows)
    return Triangle("rascal", [[rascal_entry(n, k) for k in range(n + 1)]
                               for n in range(num_rows)])


GENERATORS = {
    "pascal": build_pascal,
    "rascal-diamond": build_rascal_diamond,
    "rascal-additive": build_rascal_additive,
    "rascal-diagonal": build_rascal_diagonal,
    "rascal": build_rascal_closed_form,
}


def first_difference(a: Triangle, b: Triangle) -> Cell | None:
    """First row-major cell where two triangles disagree, or None if identical.

    A difference in row count is reported at the first cell of the first
    missing row.
    """
    for n in range(min(len(a), len(b))):
        for k, (x, y) in enumerate(zip(a.rows[n], b.rows[n])):
            if x != y:
                return Cell(n, k)
    if len(a) != len(b):
        return Cell(min(len(a), len(b)), 0)
    return None


def from_rows(name: str, rows: Sequence[Sequence[int]]) -> Triangle:
    if not rows:
        raise EmptyInputError("triangle has no rows")
    return Triangle(name, rows)
