import itertools
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

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
from gridfrechet.core import l1_distance, validate_walk
from gridfrechet.generators import GeneratorError, band_signal_instance, feasibility_boundary, in_band


def brute_diagonal(d, r, sign=1):
    return {
        tuple(sign * x for x in p)
        for p in itertools.product(range(r + 1), repeat=d)
        if sum(p) == r
    }


def test_diagonal_examples():
    assert enumerate_diagonal(2, 2) == {(2, 0), (1, 1), (0, 2)}
    assert enumerate_diagonal(3, 0) == {(0, 0, 0)}
    assert enumerate_diagonal(2, 1, Sign.NEGATIVE) == {(-1, 0), (0, -1)}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_diagonal_matches_brute_force(d):
    for r in range(7):
        for sign in Sign:
            got = enumerate_diagonal(d, r, sign)
            assert got == brute_diagonal(d, r, sign.value)
            assert len(got) == comb(r + d - 1, d - 1)


def test_cross_diagonal_distance_small():
    for a, b in [(3, 2), (0, 4), (5, 5)]:
        for p in enumerate_diagonal(3, a):
            for q in enumerate_diagonal(3, b, Sign.NEGATIVE):
                assert l1_distance(p, q) == a + b


def test_layer_path_example():
    assert layer_path(2, 2).points() == [(3, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


@pytest.mark.parametrize("d", [2, 3, 4])
def test_layer_path_covers_diagonal_once(d):
    for a in range(0, 9 if d < 4 else 7):
        for s, t in itertools.permutations(range(1, d + 1), 2):
            w = layer_path(d, a, s, t)
            assert w.multiplicity == 1
            pts = w.points()
            es = [0] * d
            es[s - 1] = a + 1
            et = [0] * d
            et[t - 1] = a
            assert pts[0] == tuple(es) and pts[-1] == tuple(et)
            on_diag = [p for p in pts if sum(p) == a and min(p) >= 0]
            assert set(on_diag) == enumerate_diagonal(d, a)
            assert len(on_diag) == len(set(on_diag))


def test_layer_path_rejects_bad_axes():
    with pytest.raises(GeneratorError):
        layer_path(3, 2, 1, 1)
    with pytest.raises(GeneratorError):
        layer_path(3, 2, 1, 4)
    with pytest.raises(GeneratorError):
        layer_path(1, 2)


def test_band_path_base_case():
    w = band_path(BandSpec(2, 2, 1, 1))
    assert w.points() == [(3, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2), (0, 3)]


def audit_band(d, a, w, lam, sign=Sign.POSITIVE):
    path = band_path(BandSpec(d, a, w, lam, sign))
    v = path.vertices
    assert np.all(in_band(v, a, w, sign))
    assert path.multiplicity <= lam
    pts = set(path.points())
    for i in range(w):
        assert enumerate_diagonal(d, a + 2 * i, sign) <= pts
    assert path.n >= lam * w * (a / d) ** (d - 1)
    return path


def test_band_path_example_audit():
    path = audit_band(3, 6, 2, 2)
    assert path.n >= 16


def test_band_path_negative_is_negation():
    for d, a, w, lam in [(2, 3, 2, 1), (3, 4, 3, 2), (4, 2, 1, 3)]:
        pos = band_path(BandSpec(d, a, w, lam))
        neg = band_path(BandSpec(d, a, w, lam, Sign.NEGATIVE))
        assert np.array_equal(neg.vertices, -pos.vertices)


@given(st.integers(2, 4), st.integers(1, 8), st.integers(1, 3), st.integers(1, 3))
def test_band_path_audit_property(d, a, w, lam):
    audit_band(d, a, w, lam)


def test_band_path_rejections():
    for args in [(1, 2, 1, 1), (2, 0, 1, 1), (2, 2, 0, 1), (2, 2, 1, 0)]:
        with pytest.raises(GeneratorError):
            band_path(BandSpec(*args))


def test_embed_examples():
    o = validate_walk([(0,), (1,)])
    s = validate_walk([(0,), (1,)])
    assert embed_product(o, s, [1]).points() == [(0, 0), (0, 1), (1, 1)]
    single = validate_walk([(5, 5)])
    sig = validate_walk([(0,), (1,), (2,)])
    assert embed_product(single, sig, []).points() == [(5, 5, 0), (5, 5, 1), (5, 5, 2)]
    with pytest.raises(GeneratorError):
        embed_product(o, s, [])
    with pytest.raises(GeneratorError):
        embed_product(validate_walk([(0,), (1,), (2,)]), s, [1, 0])
    with pytest.raises(GeneratorError):
        embed_product(o, s, [5])


def test_embed_band_projection_audit():
    rng = np.random.default_rng(0)
    origin = band_path(BandSpec(3, 4, 2, 1))
    signal = random_lambda_walk(1, 400, 3, 1)
    cuts = np.sort(rng.integers(0, signal.n, size=origin.n - 1)).tolist()
    out = embed_product(origin, signal, cuts)
    assert out.n == signal.n + origin.n - 1
    assert np.all(in_band(out.vertices[:, :3], 4, 2))
    assert set(map(tuple, out.vertices[:, :3].tolist())) == set(origin.points())


@pytest.mark.parametrize("d", [3, 4])
def test_cross_band_distances(d):
    """Embedded walks over opposite bands: cross distances minus signal distances span [2a, 2a+4w-2]."""
    rng = np.random.default_rng(d)
    a, w = 5, 2
    o_p = band_path(BandSpec(d - 1, a, w, 1))
    o_q = band_path(BandSpec(d - 1, a, w, 1, Sign.NEGATIVE))
    sig_p = random_lambda_walk(1, 300, 5, 3)
    sig_q = random_lambda_walk(1, 300, 5, 4)
    P = embed_product(o_p, sig_p, np.sort(rng.integers(0, 300, o_p.n - 1)).tolist())
    Q = embed_product(o_q, sig_q, np.sort(rng.integers(0, 300, o_q.n - 1)).tolist())
    full = np.abs(P.vertices[:, None, :] - Q.vertices[None, :, :]).sum(axis=2)
    sig = np.abs(P.vertices[:, None, -1] - Q.vertices[None, :, -1])
    gap = full - sig
    assert gap.min() >= 2 * a and gap.max() <= 2 * a + 4 * w - 2
    # both ends of the range occur
    band_dist = np.abs(o_p.vertices[:, None, :] - o_q.vertices[None, :, :]).sum(axis=2)
    assert band_dist.min() == 2 * a and band_dist.max() == 2 * a + 4 * w - 2


def test_scale_examples():
    assert scale_discretize_1d([0, 1], 3).points() == [(0,), (1,), (2,), (3,)]
    assert scale_discretize_1d([0], 7).points() == [(0,)]
    w = scale_discretize_1d([0, 2, -1], 2)
    assert w.n == 11 and w[4] == (4,) and w[-1] == (-2,)
    with pytest.raises(GeneratorError):
        scale_discretize_1d([], 2)
    with pytest.raises(GeneratorError):
        scale_discretize_1d([1], 0)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=15), st.integers(1, 6))
def test_scale_round_trip(values, C):
    w = scale_discretize_1d(values, C)
    steps = np.cumsum([0] + [C * abs(b - a) for a, b in zip(values, values[1:])]).astype(np.int64)
    assert w.vertices[steps, 0].tolist() == [C * v for v in values]


def test_random_walk_examples():
    assert random_lambda_walk(3, 1, 1, 0).points() == [(0, 0, 0)]
    assert random_lambda_walk(3, 500, 2, 7) == random_lambda_walk(3, 500, 2, 7)
    w = random_lambda_walk(3, 1000, 1, 7)
    assert w.n == 1000 and w.multiplicity == 1
    assert len(set(w.points())) == 1000


@given(st.integers(1, 4), st.integers(1, 600), st.integers(1, 3), st.integers(0, 2**32))
def test_random_walk_property(d, n, lam, seed):
    w = random_lambda_walk(d, n, lam, seed)
    assert w.n == n and w.multiplicity <= lam and w.dimension == d
    assert w[0] == (0,) * d


def test_random_walk_escapes_traps_in_2d():
    # plain self-avoiding growth in the plane traps itself within a few hundred steps
    for seed in range(3):
        w = random_lambda_walk(2, 20000, 1, seed)
        assert w.n == 20000 and w.multiplicity == 1
        steps = np.diff(w.vertices, axis=0)
        # no long straight tails: the walk keeps turning
        assert (steps[1:] != steps[:-1]).any(axis=1).mean() > 0.3


def test_hardness_example():
    hp = hardness_params(3, 1, Fraction(1, 2), 2000)
    assert hp.a == 190 and hp.w == 95 and hp.feasible and hp.C == 950
    assert hp.a_raw == pytest.approx(3 * 4000**0.5)


def test_hardness_tiny_eps_infeasible():
    hp = hardness_params(3, 1, Fraction(1, 10**6), 100)
    assert not hp.feasible
    assert hp.w_raw < 1 and hp.w == 1
    assert hp.eps < hp.threshold


def test_hardness_boundary_transition():
    # at d = 3 the boundary is lam / (N d^2) exactly
    d, lam, N = 3, 2, 50
    boundary = Fraction(lam, N * d**2)
    assert feasibility_boundary(d, lam, N) == pytest.approx(float(boundary))
    below = hardness_params(d, lam, boundary * Fraction(999, 1000), N)
    at = hardness_params(d, lam, boundary, N)
    above = hardness_params(d, lam, boundary * Fraction(1001, 1000), N)
    assert not below.feasible and below.w_raw == 0
    assert not at.feasible and at.w_raw == 1
    assert above.feasible and above.w_raw == 1


def test_hardness_rejections():
    with pytest.raises(GeneratorError):
        hardness_params(2, 1, Fraction(1, 2), 10)
    with pytest.raises(GeneratorError):
        hardness_params(3, 1, Fraction(3, 2), 10)
    with pytest.raises(GeneratorError):
        hardness_params(3, 0, Fraction(1, 2), 10)


def test_band_signal_instance():
    w = band_signal_instance(3, 2000, 1, 5)
    assert w.n >= 2000 and w.dimension == 3 and w.multiplicity == 1
    neg = band_signal_instance(3, 2000, 1, 5, Sign.NEGATIVE)
    assert np.all(neg.vertices[:, :2] <= 0)
    assert band_signal_instance(4, 500, 2, 1) == band_signal_instance(4, 500, 2, 1)
