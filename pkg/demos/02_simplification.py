"""Greedy ball-exit simplification and its error bound."""

import math

from gridfrechet import GridWalk, exact_distance, random_lambda_walk, simplify

P = random_lambda_walk(2, 600, lam=2, seed=3)

for alpha in (0, 1, 3, 8):
    curve, table = simplify(P, alpha)
    err = exact_distance(P, GridWalk(curve.vertices))
    print(f"alpha={alpha}: {P.n} -> {len(curve)} vertices, distance to the original {err}")
    assert err <= math.ceil(alpha)

# The table tells which simplified edge every original vertex falls on.
curve, table = simplify(P, 3)
print("first kept indices:", curve.indices[:6].tolist())
print("assignments of the first 12 vertices:", table.assignments[:12].tolist())
