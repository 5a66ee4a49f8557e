"""Compiled dynamic-programming kernels over int64 symbol arrays."""

import numpy as np
from numba import njit


@njit(cache=True)
def edit_distance_kernel(a, b):
    n = a.shape[0]
    m = b.shape[0]
    prev = np.arange(m + 1)
    cur = np.empty(m + 1, dtype=np.int64)
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            best = prev[j - 1] + (1 if ai != b[j - 1] else 0)
            up = prev[j] + 1
            if up < best:
                best = up
            left = cur[j - 1] + 1
            if left < best:
                best = left
            cur[j] = best
        prev, cur = cur, prev
    return prev[m]


@njit(cache=True)
def edit_table_kernel(a, b):
    n = a.shape[0]
    m = b.shape[0]
    table = np.empty((n + 1, m + 1), dtype=np.int64)
    for j in range(m + 1):
        table[0, j] = j
    for i in range(1, n + 1):
        table[i, 0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            best = table[i - 1, j - 1] + (1 if ai != b[j - 1] else 0)
            up = table[i - 1, j] + 1
            if up < best:
                best = up
            left = table[i, j - 1] + 1
            if left < best:
                best = left
            table[i, j] = best
    return table


@njit(cache=True)
def substring_edit_kernel(text, pattern):
    """Per text end position: min edit distance of the pattern to any
    substring ending there, and the smallest start achieving it.

    Row 0 is all zeros so a match may start anywhere. Positions are 1-based;
    a start of ``end + 1`` denotes the empty substring.
    """
    n = text.shape[0]
    m = pattern.shape[0]
    cost = np.empty(n + 1, dtype=np.int64)
    start = np.empty(n + 1, dtype=np.int64)
    for j in range(n + 1):
        cost[j] = 0
        start[j] = j + 1
    new_cost = np.empty(n + 1, dtype=np.int64)
    new_start = np.empty(n + 1, dtype=np.int64)
    for i in range(1, m + 1):
        new_cost[0] = i
        new_start[0] = 1
        pi = pattern[i - 1]
        for j in range(1, n + 1):
            # lexicographic min over (cost, start) of the tight predecessors
            c = cost[j - 1] + (1 if pi != text[j - 1] else 0)
            s = start[j - 1]
            c2 = cost[j] + 1
            s2 = start[j]
            if c2 < c or (c2 == c and s2 < s):
                c = c2
                s = s2
            c3 = new_cost[j - 1] + 1
            s3 = new_start[j - 1]
            if c3 < c or (c3 == c and s3 < s):
                c = c3
                s = s3
            new_cost[j] = c
            new_start[j] = s
        cost, new_cost = new_cost, cost
        start, new_start = new_start, start
    return cost, start
