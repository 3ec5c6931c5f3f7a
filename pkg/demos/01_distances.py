"""Exact and approximate discrete Fréchet distance between two grid walks."""

from fractions import Fraction

import numpy as np

from gridfrechet import GridWalk, Metric, approx_distance, exact_distance, random_lambda_walk

# Two self-avoiding walks in 3D, the second one shifted a few cells away.
P = random_lambda_walk(3, 2000, lam=1, seed=1)
Q = GridWalk(random_lambda_walk(3, 1500, lam=1, seed=2).vertices + np.array([4, -3, 0]))
print("walk lengths:", P.n, Q.n)

# The quadratic dynamic program gives the exact value.
exact = exact_distance(P, Q)
print("exact l1 distance:", exact)
print("exact l-inf distance:", exact_distance(P, Q, Metric.LINF))

# The approximation returns an integer v with d <= v <= (1 + eps) d.
for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 10)):
    res = approx_distance(P, Q, eps)
    print(
        f"eps={eps}: value {res.value}, certified interval "
        f"[{float(res.lower_bound):.2f}, {res.value}], {res.decider_calls} decider calls"
    )
    assert exact <= res.value <= (1 + eps) * exact
