"""Greedy ball-exit simplification of grid walks together with the vertex-to-edge table."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple

import numpy as np

from . import _kernels
from .core import GridWalk, Metric


@dataclass(frozen=True)
class SimplifiedCurve:
    """Kept indices ``i_0 = 0 < ... < i_{k-1} = n - 1`` of a source walk."""

    source_length: int
    indices: np.ndarray
    alpha: Fraction
    vertices: np.ndarray

    def __len__(self) -> int:
        return len(self.indices)

    def as_walk_points(self) -> list:
        return [tuple(int(c) for c in row) for row in self.vertices]


@dataclass(frozen=True)
class SimplificationTable:
    """``assignments[k]`` is the simplified edge that source vertex ``k`` falls on.

    Edge ``t`` joins kept vertices ``t`` and ``t + 1``.  The final source vertex
    is assigned to the last edge.  A one-vertex walk has no edges and its table
    holds a single 0.
    """

    assignments: np.ndarray

    def __len__(self) -> int:
        return len(self.assignments)

    def __getitem__(self, k: int) -> int:
        return int(self.assignments[k])


def _as_fraction(alpha) -> Fraction:
    if isinstance(alpha, Fraction):
        return alpha
    if isinstance(alpha, (int, Rational)):
        return Fraction(alpha)
    if isinstance(alpha, str):
        return Fraction(alpha)
    raise TypeError("alpha must be an exact rational (int, Fraction or rational string)")


def simplify(
    P: GridWalk, alpha, metric: Metric = Metric.L1
) -> Tuple[SimplifiedCurve, SimplificationTable]:
    """Simplify ``P`` so that every kept edge but the last is longer than ``alpha``.

    The scan starts at vertex 0 and keeps the first vertex outside the closed
    ball of radius ``alpha`` around the current anchor; the last vertex is
    always kept.  Under the chosen metric the discrete Fréchet distance between
    ``P`` and the result is at most ``alpha``.
    """
    alpha = _as_fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    radius = math.floor(alpha)
    keep, table = _kernels.greedy_simplify(P.vertices, radius, metric.code)
    keep.setflags(write=False)
    table.setflags(write=False)
    verts = P.vertices[keep]
    verts.setflags(write=False)
    return SimplifiedCurve(P.n, keep, alpha, verts), SimplificationTable(table)

