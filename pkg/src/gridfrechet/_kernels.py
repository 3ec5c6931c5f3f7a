"""Compiled inner loops.  All arguments are int64 arrays; metric 0 is l1, 1 is l-inf."""

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _dist(a, i, b, j, metric):
    d = a.shape[1]
    acc = 0
    for k in range(d):
        x = a[i, k] - b[j, k]
        if x < 0:
            x = -x
        if metric == 0:
            acc += x
        elif x > acc:
            acc = x
    return acc


@njit(cache=True)
def dp_distance(p, q, metric):
    # rolling row over the shorter curve
    if q.shape[0] > p.shape[0]:
        p, q = q, p
    n = p.shape[0]
    m = q.shape[0]
    row = np.empty(m, dtype=np.int64)
    row[0] = _dist(p, 0, q, 0, metric)
    for j in range(1, m):
        c = _dist(p, 0, q, j, metric)
        row[j] = c if c > row[j - 1] else row[j - 1]
    for i in range(1, n):
        diag = row[0]
        c = _dist(p, i, q, 0, metric)
        row[0] = c if c > diag else diag
        for j in range(1, m):
            up = row[j]
            best = diag
            if up < best:
                best = up
            if row[j - 1] < best:
                best = row[j - 1]
            c = _dist(p, i, q, j, metric)
            row[j] = c if c > best else best
            diag = up
    return row[m - 1]


@njit(cache=True)
def dp_decide(p, q, delta, metric):
    if q.shape[0] > p.shape[0]:
        p, q = q, p
    n = p.shape[0]
    m = q.shape[0]
    row = np.zeros(m, dtype=np.bool_)
    if _dist(p, 0, q, 0, metric) > delta:
        return False
    row[0] = True
    for j in range(1, m):
        row[j] = row[j - 1] and _dist(p, 0, q, j, metric) <= delta
    for i in range(1, n):
        diag = row[0]
        row[0] = diag and _dist(p, i, q, 0, metric) <= delta
        alive = row[0]
        for j in range(1, m):
            up = row[j]
            reach = diag or up or row[j - 1]
            row[j] = reach and _dist(p, i, q, j, metric) <= delta
            alive = alive or row[j]
            diag = up
        if not alive:
            return False
    return row[m - 1]


@njit(cache=True)
def greedy_simplify(p, radius, metric):
    """Ball-exit scan: keep the first vertex farther than ``radius`` from the anchor.

    ``radius`` is an integer; for lattice points ``dist > alpha`` is the same test
    as ``dist > floor(alpha)``.  Returns the kept indices and the table T.
    """
    n = p.shape[0]
    keep = np.empty(n, dtype=np.int64)
    table = np.empty(n, dtype=np.int64)
    keep[0] = 0
    k = 1
    anchor = 0
    for i in range(1, n):
        if _dist(p, anchor, p, i, metric) > radius:
            keep[k] = i
            k += 1
            anchor = i
    if keep[k - 1] != n - 1:
        keep[k] = n - 1
        k += 1
    t = 0
    for i in range(n):
        while t + 2 < k and keep[t + 1] <= i:
            t += 1
        table[i] = t
    return keep[:k].copy(), table
