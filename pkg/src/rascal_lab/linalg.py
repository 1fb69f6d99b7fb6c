"""Exact Gaussian elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    m = [[Fraction(x) for x in r] for r in matrix]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_exact(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique solution of ``a x = b``, or None.

    ``a`` may have more rows than columns.  None is returned when the system
    is inconsistent or does not pin down every unknown.
    """
    if not a:
        return None
    n = len(a[0])
    aug = [list(r) + [rhs] for r, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None  # inconsistent: pivot in the augmented column
    if len(pivots) < n:
        return None
    return [m[i][n] for i in range(n)]


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])
