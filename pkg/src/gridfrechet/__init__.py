"""Fréchet distance between walks on the integer grid.

Exact and (1 + eps)-approximate discrete distance, the continuous distance via
edge bisection, curve simplification, the switching-cell decider, and
generators for structured hard instances.
"""

from .approx import (
    ApproxResult,
    DeciderOutcome,
    Method,
    Verdict,
    approx_decide,
    approx_distance,
    continuous_distance,
    select_method,
)
from .core import DimensionMismatch, GridWalk, Metric, WalkError, distance, l1_distance, linf_distance
from .exact import brute_force_distance, exact_decide, exact_distance
from .freespace import direct_switching_scan, freespace_decide, switching_cells_row
from .generators import (
    BandSpec,
    Sign,
    band_path,
    embed_product,
    enumerate_diagonal,
    hardness_params,
    layer_path,
    random_lambda_walk,
    scale_discretize_1d,
)
from .io import parse_rational, parse_walk, read_walk, serialize_walk, write_walk
from .simplify import SimplificationTable, SimplifiedCurve, simplify

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
