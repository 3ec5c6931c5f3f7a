import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_pair, straight_line
from gridfrechet import Metric, brute_force_distance, exact_decide, exact_distance, random_lambda_walk
from gridfrechet.core import DimensionMismatch, distance, validate_walk
from gridfrechet.exact import InstanceTooLarge


def full_table_distance(P, Q, metric):
    """Textbook full-table recursion, kept independent of the library kernels."""
    n, m = P.n, Q.n
    D = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for j in range(m):
            c = distance(P[i], Q[j], metric)
            if i == 0 and j == 0:
                D[i, j] = c
            elif i == 0:
                D[i, j] = max(D[i, j - 1], c)
            elif j == 0:
                D[i, j] = max(D[i - 1, j], c)
            else:
                D[i, j] = max(min(D[i - 1, j], D[i, j - 1], D[i - 1, j - 1]), c)
    return int(D[-1, -1])


def test_decide_examples():
    P = validate_walk([(0,), (1,), (2,)])
    Q = validate_walk([(0,), (1,)])
    assert exact_decide(P, P, 0)
    assert not exact_decide(P, Q, 0)
    assert exact_decide(P, Q, 1)
    assert not exact_decide(P, Q, -1)


def test_distance_examples():
    P = validate_walk([(0,), (1,), (2,), (1,)])
    Q = validate_walk([(0,), (1,)])
    assert exact_distance(P, P) == 0
    assert exact_distance(P, Q) == 1
    A, B = straight_line(20), straight_line(20, y=10)
    assert exact_distance(A, B) == 10
    assert brute_force_distance(straight_line(3), straight_line(3, y=10)) == 10


def test_brute_force_examples():
    p, q = validate_walk([(1, 2)]), validate_walk([(4, -2)])
    assert brute_force_distance(p, q) == 7
    assert brute_force_distance(p, q, Metric.LINF) == 4
    pal = validate_walk([(0,), (1,), (2,), (1,), (0,)])
    assert brute_force_distance(pal, pal.reversed()) == 0
    with pytest.raises(InstanceTooLarge):
        brute_force_distance(straight_line(9), straight_line(9))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        exact_distance(straight_line(3), validate_walk([(0,)]))


@pytest.mark.parametrize("metric", list(Metric))
def test_rolling_row_matches_full_table(metric):
    rng = np.random.default_rng(7)
    for _ in range(60):
        P, Q = random_pair(rng, int(rng.integers(1, 4)), 40, lam=int(rng.integers(1, 3)))
        assert exact_distance(P, Q, metric) == full_table_distance(P, Q, metric)


def test_decide_is_step_function_and_symmetric():
    rng = np.random.default_rng(11)
    for _ in range(200):
        metric = Metric.L1 if rng.random() < 0.5 else Metric.LINF
        P, Q = random_pair(rng, int(rng.integers(1, 4)), 60)
        dist = exact_distance(P, Q, metric)
        assert dist == exact_distance(Q, P, metric)
        assert dist == exact_distance(P.reversed(), Q.reversed(), metric)
        for delta in range(dist + 3):
            assert exact_decide(P, Q, delta, metric) == (dist <= delta)


@given(
    st.integers(1, 3),
    st.integers(1, 8),
    st.integers(1, 8),
    st.integers(0, 10**6),
    st.sampled_from(list(Metric)),
)
def test_brute_force_agrees_property(d, n, m, seed, metric):
    P = random_lambda_walk(d, n, 2, seed)
    Q = random_lambda_walk(d, m, 1, seed + 1)
    assert brute_force_distance(P, Q, metric) == exact_distance(P, Q, metric)


def test_distance_bounds():
    # the endpoints always have to be matched
    rng = np.random.default_rng(5)
    for _ in range(50):
        P, Q = random_pair(rng, 3, 50, spread=6)
        dist = exact_distance(P, Q)
        assert dist >= distance(P[0], Q[0]) and dist >= distance(P[-1], Q[-1])
        assert dist <= max(distance(p, q) for p in P for q in Q)
