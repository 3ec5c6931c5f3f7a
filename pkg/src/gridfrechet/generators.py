"""Instance generators: diagonals, band paths, product embeddings and random lambda-walks.

Axes are numbered from 1 in :func:`layer_path`; everything else is 0-based.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Set

import numpy as np

from .core import GridWalk, validate_walk


class GeneratorError(ValueError):
    """Infeasible parameters or a construction step that failed its audit."""


class Sign(enum.Enum):
    POSITIVE = 1
    NEGATIVE = -1


def _compositions(d: int, r: int):
    if d == 1:
        yield (r,)
        return
    for x in range(r, -1, -1):
        for rest in _compositions(d - 1, r - x):
            yield (x,) + rest


def enumerate_diagonal(d: int, r: int, sign: Sign = Sign.POSITIVE) -> Set[tuple]:
    """The r-diagonal: points with all coordinates >= 0 (or <= 0) and |sum| = r."""
    if d < 1 or r < 0:
        raise GeneratorError("enumerate_diagonal needs d >= 1 and r >= 0")
    s = sign.value
    return {tuple(s * x for x in c) for c in _compositions(d, r)}


def _canonical_layer(d: int, a: int) -> List[tuple]:
    # from (a+1) e_1 to a e_d through every point of the a-diagonal
    if d == 2:
        path = [(a + 1, 0)]
        for k in range(a + 1):
            path.append((a - k, k))
            if k < a:
                path.append((a - k, k + 1))
        return path
    path: List[tuple] = []
    axes = [1 + (m % 2) for m in range(a + 2)]
    for m in range(a + 1):
        sub = _oriented_layer(d - 1, a - m, axes[m], axes[m + 1])
        piece = [p + (m,) for p in sub]
        if path and sum(abs(x - y) for x, y in zip(path[-1], piece[0])) != 1:
            raise GeneratorError(f"slices {m - 1} and {m} of the layer path are not adjacent")
        path.extend(piece)
    return path


def _oriented_layer(d: int, a: int, s: int, t: int) -> List[tuple]:
    base = _canonical_layer(d, a)
    others = [k for k in range(d) if k not in (s - 1, t - 1)]
    out = []
    for p in base:
        q = [0] * d
        q[s - 1] = p[0]
        q[t - 1] = p[d - 1]
        for k, x in zip(others, p[1 : d - 1]):
            q[k] = x
        out.append(tuple(q))
    return out


def layer_path(d: int, a: int, s: int = 1, t: int = 2) -> GridWalk:
    """Simple path on the a- and (a+1)-diagonals from ``(a+1) e_s`` to ``a e_t`` covering the a-diagonal.

    Axes ``s`` and ``t`` are 1-based and must differ.  Built by slicing on the
    last coordinate and joining the lower-dimensional paths with alternating
    axes; slice adjacency is checked while building.
    """
    if d < 2:
        raise GeneratorError("layer_path needs d >= 2")
    if s == t or not (1 <= s <= d and 1 <= t <= d):
        raise GeneratorError(f"layer_path needs distinct axes in 1..{d}, got s={s}, t={t}")
    if a < 0:
        raise GeneratorError("layer_path needs a >= 0")
    return validate_walk(_oriented_layer(d, a, s, t))


@dataclass(frozen=True)
class BandSpec:
    d: int
    a: int
    w: int
    lam: int = 1
    sign: Sign = Sign.POSITIVE


def _band_route(d: int, a: int, w: int) -> List[tuple]:
    last = d - 1
    route: List[tuple] = []
    for i in range(w):
        r = a + 2 * i
        layer = _oriented_layer(d, r, 1, d)
        if i % 2 == 0:
            if i > 0:
                # connector r e_1 is the second vertex of the layer; skip (r+1) e_1
                layer = layer[1:]
            ext = [0] * d
            ext[last] = r + 1
            layer = layer + [tuple(ext)]
        else:
            layer = layer[::-1]
        if route and sum(abs(x - y) for x, y in zip(route[-1], layer[0])) != 1:
            raise GeneratorError(f"band layers {i - 1} and {i} are not adjacent")
        route.extend(layer)
    return route


def band_path(spec: BandSpec) -> GridWalk:
    """A walk visiting no point more than ``lam`` times inside the band of radii ``a .. a + 2w - 1`` (or its negation).

    The single-pass route visits the layer paths of radii a, a+2, ... in
    alternating directions.  The route is then walked ``lam`` times, back and
    forth, without repeating the turning vertex.
    """
    d, a, w, lam = spec.d, spec.a, spec.w, spec.lam
    if d < 2:
        raise GeneratorError("band_path needs d >= 2")
    if a < 1:
        raise GeneratorError("band_path needs a >= 1")
    if w < 1:
        raise GeneratorError("band_path needs w >= 1")
    if lam < 1:
        raise GeneratorError("band_path needs lambda >= 1")
    route = _band_route(d, a, w)
    full = list(route)
    for k in range(1, lam):
        leg = route[::-1] if k % 2 == 1 else route
        full.extend(leg[1:])
    arr = np.array(full, dtype=np.int64) * spec.sign.value
    return validate_walk(arr)


def in_band(points: np.ndarray, a: int, w: int, sign: Sign = Sign.POSITIVE) -> np.ndarray:
    pts = np.asarray(points) * sign.value
    total = pts.sum(axis=1)
    return np.all(pts >= 0, axis=1) & (total >= a) & (total <= a + 2 * w - 1)


def embed_product(origin: GridWalk, signal: GridWalk, cuts: Sequence[int]) -> GridWalk:
    """Walk the signal block by block while the origin path idles, advancing it between blocks.

    Block ``t`` pairs ``origin[t]`` with ``signal[c_t .. c_{t+1}]`` where
    ``c_0 = 0``, ``c_{|origin|} = |signal| - 1`` and the interior cut points are
    ``cuts``.  The result lives in ``d1 + d2`` dimensions.
    """
    L = origin.n
    cuts = [int(c) for c in cuts]
    if len(cuts) != L - 1:
        raise GeneratorError(f"need {L - 1} cuts for an origin of {L} vertices, got {len(cuts)}")
    for c in cuts:
        if not 0 <= c <= signal.n - 1:
            raise GeneratorError(f"cut {c} out of range [0, {signal.n - 1}]")
    bounds = [0] + cuts + [signal.n - 1]
    if any(b1 < b0 for b0, b1 in zip(bounds, bounds[1:])):
        raise GeneratorError("cuts must be non-decreasing")
    o, s = origin.vertices, signal.vertices
    blocks = []
    for t in range(L):
        seg = s[bounds[t] : bounds[t + 1] + 1]
        blocks.append(np.hstack([np.repeat(o[t : t + 1], len(seg), axis=0), seg]))
    return validate_walk(np.vstack(blocks))


def scale_discretize_1d(values: Sequence[int], C: int) -> GridWalk:
    """Scale a 1D curve by ``C`` and replace each edge with unit steps."""
    values = [int(v) for v in values]
    if not values:
        raise GeneratorError("scale_discretize_1d needs at least one value")
    if C < 1:
        raise GeneratorError("scale_discretize_1d needs C >= 1")
    out = [C * values[0]]
    for v in values[1:]:
        target = C * v
        step = 1 if target > out[-1] else -1
        out.extend(range(out[-1] + step, target + step, step) if target != out[-1] else [])
    return validate_walk(np.array(out, dtype=np.int64).reshape(-1, 1))


# doublings of the back-off before the walk freezes its prefix
_MAX_BACKOFF = 6


def random_lambda_walk(d: int, n: int, lam: int = 1, seed: int = 0) -> GridWalk:
    """Random walk from the origin that never visits a point more than ``lam`` times.

    Each step tries the 2d directions in random order.  A trapped walk backs
    up 1, 2, 4, ... vertices; the count resets once the walk is longer than
    ever before.  If that keeps failing, the walk is cut back to its last
    vertex of maximal first coordinate, that prefix is frozen, and growth
    continues in the half-space beyond it, which the frozen part never enters.
    """
    if d < 1 or n < 1 or lam < 1:
        raise GeneratorError("random_lambda_walk needs d >= 1, n >= 1, lam >= 1")
    rng = np.random.default_rng(seed)
    moves = [tuple((s if k == i else 0) for k in range(d)) for i in range(d) for s in (1, -1)]
    origin = (0,) * d
    path = [origin]
    counts = {origin: 1}
    batch = None
    b = 0
    floor = None  # new vertices need first coordinate > floor
    frozen = 1  # length of the prefix that is never popped

    def step_from(cur):
        nonlocal batch, b
        if batch is None or b == len(batch):
            batch = np.argsort(rng.random((4096, 2 * d)), axis=1)
            b = 0
        order = batch[b]
        b += 1
        for mv in order:
            dx = moves[mv]
            nxt = tuple(x + y for x, y in zip(cur, dx))
            if floor is not None and nxt[0] <= floor:
                continue
            if counts.get(nxt, 0) < lam:
                return nxt
        return None

    streak = 0  # consecutive traps without new progress
    longest = 1
    while len(path) < n:
        nxt = step_from(path[-1])
        if nxt is not None:
            path.append(nxt)
            counts[nxt] = counts.get(nxt, 0) + 1
            if len(path) > longest:
                longest = len(path)
                streak = 0
            continue
        if streak > _MAX_BACKOFF:
            top = max(p[0] for p in path[frozen - 1 :])
            cut = max(k for k in range(frozen - 1, len(path)) if path[k][0] == top)
            for gone in path[cut + 1 :]:
                counts[gone] -= 1
            del path[cut + 1 :]
            floor, frozen = top, len(path)
            longest, streak = len(path), 0
            continue
        # back up 1, 2, 4, ... vertices so deep pockets are left quickly
        for _ in range(min(2**streak, len(path) - frozen)):
            gone = path.pop()
            counts[gone] -= 1
        streak += 1
    return validate_walk(np.array(path, dtype=np.int64))



@dataclass(frozen=True)
class HardnessParams:
    d: int
    lam: int
    eps: Fraction
    N: int
    a_raw: float
    a: int
    w_raw: int
    w: int
    C: int
    n_derived: float
    threshold: float
    feasible: bool


def _ceil_root(x: Fraction, k: int) -> int:
    """Smallest integer a >= 0 with a**k >= x."""
    guess = max(0, int(math.ceil(float(x) ** (1.0 / k))))
    while guess > 0 and (guess - 1) ** k >= x:
        guess -= 1
    while guess**k < x:
        guess += 1
    return guess


def _floor_scaled_root(eps: Fraction, x: Fraction, k: int) -> int:
    """floor(eps * x**(1/k)) computed exactly."""
    g = max(0, int(float(eps) * float(x) ** (1.0 / k)))
    while g > 0 and (Fraction(g) / eps) ** k > x:
        g -= 1
    while (Fraction(g + 1) / eps) ** k <= x:
        g += 1
    return g


def feasibility_boundary(d: int, lam: int, N: int) -> float:
    """Smallest eps (exclusive) for which the band width eps * a exceeds one."""
    return (lam / (N * d ** (d - 1))) ** (1.0 / (d - 2))


def hardness_params(d: int, lam: int, eps, N: int) -> HardnessParams:
    """Band radius ``a`` and width ``w`` of the approximate lower-bound construction.

    ``a`` is ``d (N / (lam eps))^(1/(d-1))`` rounded up and ``w`` is
    ``floor(eps a)`` clamped to at least 1.  ``feasible`` is the ``eps`` lower
    bound ``eps > d^(-(d-1)/(d-2)) (lam / n)^(1/(d-2))`` with ``n`` the derived
    curve complexity; it is evaluated exactly through the equivalent integer
    form ``N eps^(d-2) d^(d-1) > lam``.
    """
    if d < 3:
        raise GeneratorError("hardness parameters need d >= 3")
    eps = Fraction(eps)
    if not (0 < eps <= 1):
        raise GeneratorError("hardness parameters need 0 < eps <= 1")
    if N < 1 or lam < 1:
        raise GeneratorError("hardness parameters need N >= 1 and lambda >= 1")
    target = Fraction(d ** (d - 1) * N) / (lam * eps)  # a_raw ** (d - 1)
    a_raw = d * (float(N) / (lam * float(eps))) ** (1.0 / (d - 1))
    a = _ceil_root(target, d - 1)
    w_raw = _floor_scaled_root(eps, target, d - 1)
    w = max(1, math.floor(eps * a))
    n_derived = (
        N ** (1 + 1 / (d - 1))
        * float(eps) ** (1 - 1 / (d - 1))
        * lam ** (-1 / (d - 1))
        * d
    )
    threshold = d ** (-(d - 1) / (d - 2)) * (lam / n_derived) ** (1 / (d - 2))
    feasible = N * eps ** (d - 2) * d ** (d - 1) > lam
    return HardnessParams(d, lam, eps, N, a_raw, a, w_raw, w, 10 * w, n_derived, threshold, feasible)


def band_signal_instance(
    d: int, n: int, lam: int = 1, seed: int = 0, sign: Sign = Sign.POSITIVE, C: int = 10
) -> GridWalk:
    """Benchmark walk: a 1D signal embedded over a band path in ``d - 1`` dimensions.

    The signal is a random integer curve in ``[-10, 10]`` scaled by ``C`` and
    discretised; the band path advances once per signal edge.  Output length
    is at least ``n`` (overshoot below ``20 C``).
    """
    if d < 3:
        raise GeneratorError("band_signal_instance needs d >= 3")
    rng = np.random.default_rng(seed)
    values = [int(rng.integers(-10, 11))]
    total = 0
    while total + (len(values) - 1) < n or len(values) < 2:
        v = int(rng.integers(-10, 11))
        if v == values[-1]:
            continue
        total += C * abs(v - values[-1])
        values.append(v)
    edges = len(values) - 1
    a = max(1, edges // 2)
    while True:
        origin = band_path(BandSpec(d - 1, a, 1, lam, Sign.POSITIVE))
        if origin.n >= edges:
            break
        a *= 2
    origin = GridWalk(origin.vertices[:edges] * sign.value)
    signal = scale_discretize_1d(values, C)
    steps = np.cumsum([C * abs(y - x) for x, y in zip(values, values[1:])])
    return embed_product(origin, signal, steps[:-1].tolist())
