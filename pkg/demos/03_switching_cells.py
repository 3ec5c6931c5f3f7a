"""The switching-cell decider compared with the dynamic program on simplified curves."""

from fractions import Fraction

import numpy as np

from gridfrechet import GridWalk, Method, approx_decide, exact_decide, exact_distance, random_lambda_walk, simplify
from gridfrechet.core import build_membership_index
from gridfrechet.freespace import FreeSpaceStats, direct_switching_scan, freespace_decide, switching_cells_row

P = random_lambda_walk(3, 400, seed=10)
Q = GridWalk(random_lambda_walk(3, 300, seed=11).vertices + np.array([2, 2, 0]))
dist = exact_distance(P, Q)
print("exact distance:", dist)

# One row of the free-space matrix, found through shell points on P.
alpha = Fraction(3, 2)
Pa, T = simplify(P, alpha)
idx = build_membership_index(P)
row = switching_cells_row(P, Pa, T, idx, Q[50], dist, row=50)
print("row 50 switching columns:", row.columns[:10], "...")
assert row == direct_switching_scan(Pa.vertices, Q[50], dist, row=50)

# The full decider only touches switching cells plus one probe per stretch.
Qa, TQ = simplify(Q, alpha)
for R in (dist - 2, dist, dist + 2):
    stats = FreeSpaceStats()
    got = freespace_decide(P, Q, Pa, Qa, (T, TQ), (idx, None), R, stats=stats)
    print(
        f"R={R}: {got} (DP says {exact_decide(Pa, Qa, R)}), rows {stats.rows}, "
        f"switching cells {stats.switching_cells}, probes {stats.probes}, "
        f"matrix size {len(Pa) * len(Qa)}"
    )

# Both decider methods agree.
for delta in (dist // 2, dist - 1, dist):
    a = approx_decide(P, Q, delta, Fraction(1, 4), force_method=Method.SIMPLIFIED_DP)
    b = approx_decide(P, Q, delta, Fraction(1, 4), force_method=Method.SWITCHING_CELLS)
    print(f"delta={delta}: {a.verdict.value} / {b.verdict.value}")
