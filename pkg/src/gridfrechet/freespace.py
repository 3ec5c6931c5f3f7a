"""Free-space decisions through switching cells.

For a row vertex ``q`` the free cells of the row are the simplified vertices
within distance ``R`` of ``q``.  A change of status between two consecutive
simplified vertices forces the underlying walk to step from distance ``R`` to
``R + 1`` (or back), because a unit step moves the l1 or l-inf distance by at
most one.  So every switching cell is witnessed by an occurrence, in the
column walk, of a lattice point on one of the two shells of radius ``R`` and
``R + 1`` around ``q``; the table T then names the simplified edge that
occurrence belongs to.

Zero runs of each row are recovered from the switching cells with one probe
per stretch, and a sweep over consecutive rows propagates the earliest
reachable column of every run.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    DimensionMismatch,
    GridWalk,
    MembershipIndex,
    Metric,
    build_membership_index,
    pairwise_to_point,
)
from .simplify import SimplificationTable, SimplifiedCurve

Interval = Tuple[int, int]


class FreeSpaceError(RuntimeError):
    """Internal inconsistency: a table that does not match its curve, or broken tags."""


class CellTag(enum.Flag):
    RUN_START = enum.auto()
    RUN_END = enum.auto()


BOTH = CellTag.RUN_START | CellTag.RUN_END


@dataclass(frozen=True)
class Shell:
    center: Tuple[int, ...]
    radius: int
    metric: Metric
    points: np.ndarray

    def __len__(self) -> int:
        return len(self.points)

    def as_set(self) -> set:
        return {tuple(row) for row in self.points.tolist()}


@dataclass(frozen=True)
class SwitchingCellRow:
    row: int
    n_cols: int
    columns: Tuple[int, ...]
    tags: Tuple[CellTag, ...]

    def __len__(self) -> int:
        return len(self.columns)

    def items(self):
        return list(zip(self.columns, self.tags))


@lru_cache(maxsize=256)
def _l1_offsets(d: int, r: int) -> np.ndarray:
    if d == 1:
        out = np.array([[0]] if r == 0 else [[-r], [r]], dtype=np.int64)
    else:
        parts = []
        for x in range(-r, r + 1):
            rest = _l1_offsets(d - 1, r - abs(x))
            head = np.full((len(rest), 1), x, dtype=np.int64)
            parts.append(np.hstack([head, rest]))
        out = np.vstack(parts)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=256)
def _linf_offsets(d: int, r: int) -> np.ndarray:
    if r == 0:
        out = np.zeros((1, d), dtype=np.int64)
        out.setflags(write=False)
        return out
    parts = []
    inner = np.arange(-(r - 1), r, dtype=np.int64)
    outer = np.arange(-r, r + 1, dtype=np.int64)
    # axis i is the first coordinate reaching |x_i| = r
    for i in range(d):
        axes = [inner] * i + [np.array([-r, r], dtype=np.int64)] + [outer] * (d - i - 1)
        grid = np.meshgrid(*axes, indexing="ij")
        parts.append(np.stack(grid, axis=-1).reshape(-1, d))
    out = np.vstack(parts)
    out.setflags(write=False)
    return out


def shell_offsets(d: int, radius: int, metric: Metric) -> np.ndarray:
    """Offsets of all lattice points at distance exactly ``radius`` from the origin."""
    if radius < 0:
        return np.empty((0, d), dtype=np.int64)
    if metric is Metric.L1:
        return _l1_offsets(d, radius)
    return _linf_offsets(d, radius)


def enumerate_shell(center: Sequence[int], radius: int, metric: Metric = Metric.L1) -> Shell:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    c = np.asarray(center, dtype=np.int64)
    pts = shell_offsets(len(c), int(radius), metric) + c
    pts.setflags(write=False)
    return Shell(tuple(int(x) for x in c), int(radius), metric, pts)


def _make_row(row: int, n_cols: int, starts, ends) -> SwitchingCellRow:
    tags = {}
    for c in starts:
        tags[int(c)] = tags.get(int(c), CellTag(0)) | CellTag.RUN_START
    for c in ends:
        tags[int(c)] = tags.get(int(c), CellTag(0)) | CellTag.RUN_END
    cols = tuple(sorted(tags))
    return SwitchingCellRow(row, n_cols, cols, tuple(tags[c] for c in cols))


def direct_switching_scan(
    P_alpha_vertices, q: Sequence[int], R: int, metric: Metric = Metric.L1, row: int = 0
) -> SwitchingCellRow:
    """Switching cells of one row, read straight off the free-space definition."""
    verts = np.asarray(P_alpha_vertices, dtype=np.int64)
    k = len(verts)
    zero = pairwise_to_point(verts, np.asarray(q, dtype=np.int64), metric) <= R
    left_one = np.ones(k, dtype=bool)
    left_one[1:] = ~zero[:-1]
    right_one = np.ones(k, dtype=bool)
    right_one[:-1] = ~zero[1:]
    starts = np.flatnonzero(zero & left_one)
    ends = np.flatnonzero(zero & right_one)
    return _make_row(row, k, starts, ends)


def switching_cells_row(
    P: GridWalk,
    P_alpha: SimplifiedCurve,
    T: SimplificationTable,
    idx: MembershipIndex,
    q: Sequence[int],
    R: int,
    metric: Metric = Metric.L1,
    row: int = 0,
) -> SwitchingCellRow:
    """Switching cells of the row of ``q`` found through shell points on ``P``."""
    qv = np.asarray(q, dtype=np.int64)
    if qv.shape[0] != P.dimension:
        raise DimensionMismatch(f"dimension mismatch: {qv.shape[0]} vs {P.dimension}")
    verts = P_alpha.vertices
    k = len(verts)
    starts: List[int] = []
    ends: List[int] = []
    if R < 0:
        return _make_row(row, k, starts, ends)

    if k >= 2:
        shells = np.vstack(
            [shell_offsets(P.dimension, R, metric), shell_offsets(P.dimension, R + 1, metric)]
        )
        _, pos = idx.batch_lookup(shells + qv)
        if pos.size:
            assigned = T.assignments[pos]
            if (P_alpha.indices[assigned] > pos).any():
                raise FreeSpaceError("table assigns a vertex to an edge starting after it")
            edges = np.unique(assigned)
            near_a = pairwise_to_point(verts[edges], qv, metric) <= R
            near_b = pairwise_to_point(verts[edges + 1], qv, metric) <= R
            ends.extend(edges[near_a & ~near_b].tolist())
            starts.extend((edges[~near_a & near_b] + 1).tolist())

    # boundary columns are tested directly
    if pairwise_to_point(verts[:1], qv, metric)[0] <= R:
        starts.append(0)
    if pairwise_to_point(verts[k - 1 :], qv, metric)[0] <= R:
        ends.append(k - 1)
    return _make_row(row, k, starts, ends)


def _check_alternation(row: SwitchingCellRow) -> None:
    inside = False
    for col, tag in zip(row.columns, row.tags):
        if CellTag.RUN_START in tag:
            if inside:
                raise FreeSpaceError(f"row {row.row}: run start at column {col} inside a run")
            inside = True
        if CellTag.RUN_END in tag:
            if not inside:
                raise FreeSpaceError(f"row {row.row}: run end at column {col} outside a run")
            inside = False
        if not tag:
            raise FreeSpaceError(f"row {row.row}: untagged column {col}")
    if inside:
        raise FreeSpaceError(f"row {row.row}: unterminated run")


def row_zero_intervals(
    row: SwitchingCellRow, probe: Callable[[int], bool]
) -> List[Interval]:
    """Maximal zero runs of a row, probing one cell per stretch between switching cells.

    ``probe(i)`` answers whether cell ``i`` of the row is free.  Each probe
    answer is cross-checked against the tags.
    """
    _check_alternation(row)
    cols = row.columns
    if not cols:
        # a zero run always ends in switching cells, so the row is all ones
        return []

    segments: List[Tuple[int, int, bool]] = []

    def stretch(a: int, b: int, expect_zero: bool) -> None:
        if a > b:
            return
        got = bool(probe((a + b) // 2))
        if got != expect_zero:
            raise FreeSpaceError(f"row {row.row}: probe in [{a}, {b}] contradicts the tags")
        segments.append((a, b, got))

    stretch(0, cols[0] - 1, False)
    inside = False
    for n_seen, (col, tag) in enumerate(zip(cols, row.tags)):
        if CellTag.RUN_START in tag:
            inside = True
        segments.append((col, col, True))
        if CellTag.RUN_END in tag:
            inside = False
        nxt = cols[n_seen + 1] if n_seen + 1 < len(cols) else row.n_cols
        stretch(col + 1, nxt - 1, inside)

    intervals: List[Interval] = []
    for a, b, zero in segments:
        if not zero:
            continue
        if intervals and intervals[-1][1] == a - 1:
            intervals[-1] = (intervals[-1][0], b)
        else:
            intervals.append((a, b))
    return intervals


def _advance(reach: List[Tuple[int, int, int]], nxt: Sequence[Interval]):
    """Propagate (l, r, earliest) runs of one row into the intervals of the next row."""
    out = []
    i = 0
    for lo, hi in nxt:
        while i < len(reach) and reach[i][1] + 1 < lo:
            i += 1
        if i == len(reach):
            break
        c = reach[i][2]
        if c <= hi:
            out.append((lo, hi, max(c, lo)))
    return out


def _start(first: Sequence[Interval]):
    if first and first[0][0] == 0:
        return [(first[0][0], first[0][1], 0)]
    return []


def interval_reachability(rows: Sequence[Sequence[Interval]], n_cols: int) -> bool:
    """Monotone reachability from the bottom-left to the top-right cell over zero runs."""
    if not rows:
        return False
    reach = _start(rows[0])
    for nxt in rows[1:]:
        if not reach:
            return False
        reach = _advance(reach, nxt)
    return any(hi == n_cols - 1 for _, hi, _ in reach)


@dataclass
class FreeSpaceStats:
    rows: int = 0
    switching_cells: int = 0
    probes: int = 0


def freespace_decide(
    P: GridWalk,
    Q: GridWalk,
    P_alpha: SimplifiedCurve,
    Q_alpha: SimplifiedCurve,
    tables: Tuple[SimplificationTable, SimplificationTable],
    indices: Tuple[Optional[MembershipIndex], Optional[MembershipIndex]],
    R: int,
    metric: Metric = Metric.L1,
    stats: Optional[FreeSpaceStats] = None,
) -> bool:
    """Decide ``dist(P_alpha, Q_alpha) <= R`` through switching cells.

    Rows follow the shorter simplified curve; columns, shells lookups and the
    membership index belong to the other one.  Missing indices are built on
    demand.
    """
    if P.dimension != Q.dimension:
        raise DimensionMismatch(f"dimension mismatch: {P.dimension} vs {Q.dimension}")
    if R < 0:
        return False
    T_P, T_Q = tables
    idx_P, idx_Q = indices
    if len(Q_alpha) <= len(P_alpha):
        col_walk, col_curve, col_table, col_idx, row_curve = P, P_alpha, T_P, idx_P, Q_alpha
    else:
        col_walk, col_curve, col_table, col_idx, row_curve = Q, Q_alpha, T_Q, idx_Q, P_alpha
    if col_idx is None:
        col_idx = build_membership_index(col_walk)
    n_cols = len(col_curve)
    col_verts = col_curve.vertices
    stats = stats if stats is not None else FreeSpaceStats()

    reach = None
    for j, q in enumerate(row_curve.vertices):
        cells = switching_cells_row(col_walk, col_curve, col_table, col_idx, q, R, metric, row=j)

        def probe(i: int, q=q) -> bool:
            stats.probes += 1
            return int(pairwise_to_point(col_verts[i : i + 1], q, metric)[0]) <= R

        intervals = row_zero_intervals(cells, probe)
        stats.rows += 1
        stats.switching_cells += len(cells)
        reach = _start(intervals) if reach is None else _advance(reach, intervals)
        if not reach:
            return False
    return any(hi == n_cols - 1 for _, hi, _ in reach)
