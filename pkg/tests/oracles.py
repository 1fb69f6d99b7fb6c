"""Independent oracles; none of these import the code under test."""
from math import comb


def rascal(n, k):
    # counting form: 1 + number of (i, j) pairs with i < k <= j ... expanded as k*(n-k) + 1
    # computed here by explicit summation so it shares no code path with the library
    return 1 + sum(1 for _ in range(k) for _ in range(n - k))


def rascal_rows(num_rows):
    return [[rascal(n, k) for k in range(n + 1)] for n in range(num_rows)]


def pascal_rows(num_rows):
    return [[comb(n, k) for k in range(n + 1)] for n in range(num_rows)]


def representable_by_dp(a, b, limit):
    reach = [False] * (limit + 1)
    reach[0] = True
    for v in range(1, limit + 1):
        reach[v] = (v >= a and reach[v - a]) or (v >= b and reach[v - b])
    return {v for v in range(limit + 1) if reach[v]}


# In (u, v) = (col, row - col) coordinates a lattice diamond is an axis-aligned
# square, so a ring is the set of cells at fixed Chebyshev distance.

def odd_ring_set(center, m):
    r, c = center
    u0, v0 = c, r - c
    return {(u + v, u) for u in range(u0 - m, u0 + m + 1) for v in range(v0 - m, v0 + m + 1)
            if max(abs(u - u0), abs(v - v0)) == m}


def even_ring_set(apex, m):
    n, k = apex
    u_lo, v_lo = k - (m - 1), (n - k) - (m - 1)
    u_hi, v_hi = k + m, (n - k) + m
    return {(u + v, u) for u in range(u_lo, u_hi + 1) for v in range(v_lo, v_hi + 1)
            if u in (u_lo, u_hi) or v in (v_lo, v_hi)}
