"""Continuous Fréchet distance through edge bisection."""

from fractions import Fraction

from gridfrechet import Metric, continuous_distance, exact_distance
from gridfrechet.approx import bisect_walk
from gridfrechet.core import validate_walk

# A segment against a walk that doubles back over it.
P = validate_walk([(0,), (1,)])
Q = validate_walk([(0,), (1,), (0,), (1,)])
print("discrete:", exact_distance(P, Q))
print("continuous:", continuous_distance(P, Q, Fraction(1, 10)))

# Bisection doubles the lattice and inserts edge midpoints.
print("bisected Q:", bisect_walk(Q).points())

A = validate_walk([(0, 0), (1, 0), (1, 1), (2, 1)])
B = validate_walk([(0, 1), (0, 2), (1, 2), (2, 2), (2, 1)])
for metric in Metric:
    print(metric.value, "discrete", exact_distance(A, B, metric), "continuous", continuous_distance(A, B, Fraction(1, 10), metric))
