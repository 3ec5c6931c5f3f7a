"""Exact discrete Fréchet distance: the quadratic dynamic program and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .core import DimensionMismatch, GridWalk, Metric, distance


@dataclass(frozen=True)
class MonotoneWalkOracleLimit:
    max_cells: int = 64


class InstanceTooLarge(ValueError):
    pass


def _same_dim(P, Q) -> None:
    # accepts anything carrying an (n, d) ``vertices`` array, e.g. simplified curves
    dp, dq = P.vertices.shape[1], Q.vertices.shape[1]
    if dp != dq:
        raise DimensionMismatch(f"dimension mismatch: {dp} vs {dq}")


def exact_decide(P: GridWalk, Q: GridWalk, delta: int, metric: Metric = Metric.L1) -> bool:
    """Whether a monotone walk of free cells joins (0, 0) to (n-1, m-1) at threshold ``delta``."""
    _same_dim(P, Q)
    if delta < 0:
        return False
    return bool(_kernels.dp_decide(P.vertices, Q.vertices, int(delta), metric.code))


def exact_distance(P: GridWalk, Q: GridWalk, metric: Metric = Metric.L1) -> int:
    """Discrete Fréchet distance via the Eiter-Mannila recurrence.

    Only one row of the table is kept, so memory is ``O(min(n, m))``.
    """
    _same_dim(P, Q)
    return int(_kernels.dp_distance(P.vertices, Q.vertices, metric.code))


def brute_force_distance(
    P: GridWalk,
    Q: GridWalk,
    metric: Metric = Metric.L1,
    limit: MonotoneWalkOracleLimit = MonotoneWalkOracleLimit(),
) -> int:
    """Minimum bottleneck over every monotone walk, enumerated one by one.

    Test oracle only: the number of walks grows like the Delannoy numbers, so
    inputs with more than ``limit.max_cells`` cells are refused.
    """
    _same_dim(P, Q)
    p, q = P.vertices.tolist(), Q.vertices.tolist()
    n, m = len(p), len(q)
    if n * m > limit.max_cells:
        raise InstanceTooLarge(f"{n}x{m} exceeds the oracle limit of {limit.max_cells} cells")
    cost = [[distance(p[i], q[j], metric) for j in range(m)] for i in range(n)]
    best = [None]

    # plain depth-first enumeration, no memoisation: every walk is visited
    def walk(i: int, j: int, worst: int) -> None:
        worst = max(worst, cost[i][j])
        if i == n - 1 and j == m - 1:
            if best[0] is None or worst < best[0]:
                best[0] = worst
            return
        if i + 1 < n:
            walk(i + 1, j, worst)
        if j + 1 < m:
            walk(i, j + 1, worst)
        if i + 1 < n and j + 1 < m:
            walk(i + 1, j + 1, worst)

    walk(0, 0, 0)
    return best[0]
