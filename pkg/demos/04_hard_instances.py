"""Diagonals, band paths and product embeddings used in lower-bound constructions."""

from fractions import Fraction

import numpy as np

from gridfrechet import (
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

print("D_2 in the plane:", sorted(enumerate_diagonal(2, 2)))
print("layer path d=2, a=2:", layer_path(2, 2).points())

# A band path visits whole diagonals; points on opposite bands are nearly equidistant.
a, w = 6, 2
P_star = band_path(BandSpec(3, a, w, lam=2))
Q_star = band_path(BandSpec(3, a, w, lam=2, sign=Sign.NEGATIVE))
cross = np.abs(P_star.vertices[:, None] - Q_star.vertices[None]).sum(axis=2)
print(f"band path: {P_star.n} vertices, multiplicity {P_star.multiplicity}")
print(f"cross distances span [{cross.min()}, {cross.max()}] (2a = {2 * a}, 2a + 4w - 2 = {2 * a + 4 * w - 2})")

# Embedding a 1D signal over the band path adds one dimension.
signal = scale_discretize_1d([0, 3, -2, 4, 1], 10)
cuts = np.linspace(0, signal.n - 1, P_star.n + 1).astype(int)[1:-1].tolist()
embedded = embed_product(P_star, signal, cuts)
print("embedded walk:", embedded.n, "vertices in", embedded.dimension, "dimensions")

# Parameter choices of the approximate lower bound.
for eps in (Fraction(1, 2), Fraction(1, 100), Fraction(1, 10**6)):
    hp = hardness_params(3, 1, eps, 2000)
    print(f"eps={eps}: a={hp.a}, w={hp.w}, feasible={hp.feasible}")

w2 = random_lambda_walk(2, 5000, lam=1, seed=0)
print("random 2D walk:", w2.n, "vertices, multiplicity", w2.multiplicity)
