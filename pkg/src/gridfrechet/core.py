"""Lattice points, grid walks, metrics and the occurrence index of a walk.

A walk is stored as a read-only ``(n, d)`` int64 array.  Points handed to the
public functions may be any integer sequence; they are normalised to tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

COORD_LIMIT = 2**40

GridPoint = Tuple[int, ...]


class WalkError(ValueError):
    """Raised for malformed walks: empty input, mixed dimensions, bad steps."""


class DimensionMismatch(ValueError):
    """Raised when two geometric objects live in different dimensions."""


class Metric(enum.Enum):
    L1 = "l1"
    LINF = "linf"

    @property
    def code(self) -> int:
        # integer tag consumed by the compiled kernels
        return 0 if self is Metric.L1 else 1


def _check_dims(p: Sequence[int], q: Sequence[int]) -> None:
    if len(p) != len(q):
        raise DimensionMismatch(f"dimension mismatch: {len(p)} vs {len(q)}")


def l1_distance(p: Sequence[int], q: Sequence[int]) -> int:
    """Sum of absolute coordinate differences (the grid-graph hop distance)."""
    _check_dims(p, q)
    return sum(abs(int(a) - int(b)) for a, b in zip(p, q))


def linf_distance(p: Sequence[int], q: Sequence[int]) -> int:
    _check_dims(p, q)
    return max((abs(int(a) - int(b)) for a, b in zip(p, q)), default=0)


def distance(p: Sequence[int], q: Sequence[int], metric: Metric = Metric.L1) -> int:
    if metric is Metric.L1:
        return l1_distance(p, q)
    return linf_distance(p, q)


def pairwise_to_point(vertices: np.ndarray, q: np.ndarray, metric: Metric) -> np.ndarray:
    """Distances from every row of ``vertices`` to the point ``q``."""
    diff = np.abs(vertices - q)
    if metric is Metric.L1:
        return diff.sum(axis=1)
    return diff.max(axis=1)


class GridWalk:
    """An immutable walk in the d-dimensional grid graph.

    Consecutive vertices are at l1 distance exactly one.  Build instances with
    :func:`validate_walk` (or :meth:`from_array` for trusted data).
    """

    __slots__ = ("_v", "_mult")

    def __init__(self, vertices: np.ndarray):
        arr = np.array(vertices, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise WalkError("walk vertices must form an (n, d) array")
        arr.setflags(write=False)
        self._v = arr
        self._mult = None

    @classmethod
    def from_array(cls, vertices: np.ndarray) -> "GridWalk":
        return validate_walk(vertices)

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    @property
    def n(self) -> int:
        return self._v.shape[0]

    @property
    def dimension(self) -> int:
        return self._v.shape[1]

    d = dimension

    @property
    def multiplicity(self) -> int:
        if self._mult is None:
            self._mult = multiplicity(self)
        return self._mult

    def is_lambda_path(self, lam: int) -> bool:
        return self.multiplicity <= lam

    def points(self) -> list:
        return [tuple(int(c) for c in row) for row in self._v]

    def reversed(self) -> "GridWalk":
        return GridWalk(self._v[::-1])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k: int) -> GridPoint:
        return tuple(int(c) for c in self._v[k])

    def __iter__(self):
        return iter(self.points())

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridWalk):
            return NotImplemented
        return self._v.shape == other._v.shape and bool(np.array_equal(self._v, other._v))

    def __hash__(self) -> int:
        return hash((self._v.shape, self._v.tobytes()))

    def __repr__(self) -> str:
        return f"GridWalk(n={self.n}, d={self.dimension})"


def validate_walk(points: Iterable[Sequence[int]]) -> GridWalk:
    """Check the grid-walk conditions and wrap ``points`` in a :class:`GridWalk`.

    Raises
    ------
    WalkError
        On empty input, inconsistent dimensions, coordinates beyond ``2**40``
        or a step whose l1 length is not one (the first offending index is
        reported).
    """
    if isinstance(points, GridWalk):
        return points
    if isinstance(points, np.ndarray) and points.dtype.kind in "iu":
        arr = points
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] < 1:
            raise WalkError("walk vertices must form a nonempty (n, d) array with d >= 1")
        bad = np.flatnonzero(np.abs(arr.astype(np.int64)).max(axis=1) > COORD_LIMIT)
        if bad.size:
            raise WalkError(f"coordinate out of range at index {int(bad[0])}")
        arr = arr.astype(np.int64)
    else:
        rows = [tuple(int(c) for c in r) for r in points]
        if not rows:
            raise WalkError("empty walk")
        d = len(rows[0])
        if d < 1:
            raise WalkError("walk vertices must have dimension >= 1")
        for k, row in enumerate(rows):
            if len(row) != d:
                raise WalkError(f"dimension mismatch at index {k}: {len(row)} vs {d}")
            # checked before the int64 cast so huge Python ints cannot wrap
            if any(abs(c) > COORD_LIMIT for c in row):
                raise WalkError(f"coordinate out of range at index {k}")
        arr = np.array(rows, dtype=np.int64)
    if arr.shape[0] > 1:
        steps = np.abs(np.diff(arr, axis=0)).sum(axis=1)
        bad = np.flatnonzero(steps != 1)
        if bad.size:
            raise WalkError(f"non-unit step at index {int(bad[0])}")
    return GridWalk(arr)


def _row_keys(vertices: np.ndarray):
    return [tuple(row) for row in vertices.tolist()]


def multiplicity(w: GridWalk) -> int:
    """Largest number of times any lattice point is visited."""
    _, counts = np.unique(w.vertices, axis=0, return_counts=True)
    return int(counts.max())


@dataclass(frozen=True)
class MembershipIndex:
    """Map from lattice point to the sorted indices where a walk visits it.

    Besides the dictionary, the index keeps the walk's vertices packed into
    mixed-radix integer keys over the walk's bounding box so that batches of
    query points can be resolved with one ``searchsorted``.
    """

    dimension: int
    entries: Dict[GridPoint, Tuple[int, ...]]
    lo: np.ndarray = field(repr=False)
    hi: np.ndarray = field(repr=False)
    strides: np.ndarray | None = field(repr=False)
    sorted_keys: np.ndarray | None = field(repr=False)
    sorted_pos: np.ndarray | None = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def batch_lookup(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Occurrences of many query points at once.

        Returns ``(which, positions)``: for every occurrence of a query point in
        the walk, the row number of the query point and the walk index.  Output
        is sorted by walk index.
        """
        points = np.asarray(points, dtype=np.int64).reshape(-1, self.dimension)
        if points.shape[0] == 0:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty
        inside = np.all((points >= self.lo) & (points <= self.hi), axis=1)
        cand = np.flatnonzero(inside)
        if cand.size == 0:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty
        if self.sorted_keys is None:
            which, pos = [], []
            for r in cand.tolist():
                for k in self.entries.get(tuple(points[r].tolist()), ()):
                    which.append(r)
                    pos.append(k)
            which = np.asarray(which, dtype=np.int64)
            pos = np.asarray(pos, dtype=np.int64)
        else:
            keys = (points[cand] - self.lo) @ self.strides
            left = np.searchsorted(self.sorted_keys, keys, side="left")
            right = np.searchsorted(self.sorted_keys, keys, side="right")
            counts = right - left
            hit = counts > 0
            if not hit.any():
                empty = np.empty(0, dtype=np.int64)
                return empty, empty
            counts = counts[hit]
            starts = left[hit]
            which = np.repeat(cand[hit], counts)
            # expand [start, start + count) ranges without a Python loop
            offsets = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
            pos = self.sorted_pos[np.repeat(starts, counts) + offsets]
        order = np.argsort(pos, kind="stable")
        return which[order], pos[order]


def build_membership_index(w: GridWalk) -> MembershipIndex:
    v = w.vertices
    entries: Dict[GridPoint, list] = {}
    for k, key in enumerate(_row_keys(v)):
        entries.setdefault(key, []).append(k)
    frozen = {key: tuple(ks) for key, ks in entries.items()}

    lo = v.min(axis=0)
    hi = v.max(axis=0)
    extents = [int(e) + 1 for e in (hi - lo)]
    volume = 1
    for e in extents:
        volume *= e
    strides = keys = pos = None
    if volume < 2**62:
        strides_list = []
        acc = 1
        for e in reversed(extents):
            strides_list.append(acc)
            acc *= e
        strides = np.array(strides_list[::-1], dtype=np.int64)
        raw = (v - lo) @ strides
        pos = np.argsort(raw, kind="stable").astype(np.int64)
        keys = raw[pos]
    return MembershipIndex(w.dimension, frozen, lo, hi, strides, keys, pos)


def lookup_occurrences(idx: MembershipIndex, v: Sequence[int]) -> Tuple[int, ...]:
    if len(v) != idx.dimension:
        raise DimensionMismatch(f"dimension mismatch: {len(v)} vs {idx.dimension}")
    return idx.entries.get(tuple(int(c) for c in v), ())
