"""Approximate decider, (1 + eps)-approximate value search and the continuous wrapper."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import DimensionMismatch, GridWalk, Metric, distance
from .exact import exact_decide
from .freespace import freespace_decide
from .simplify import simplify


class Verdict(enum.Enum):
    LE = "LE"  # d <= (1 + eps) * delta
    GT = "GT"  # d > delta


class Method(enum.Enum):
    SIMPLIFIED_DP = "dp"
    SWITCHING_CELLS = "cells"


@dataclass(frozen=True)
class DeciderOutcome:
    verdict: Verdict
    method: Optional[Method] = None

    def __bool__(self) -> bool:
        return self.verdict is Verdict.LE


@dataclass(frozen=True)
class MethodChoice:
    kind: Method
    alpha_star: float


@dataclass
class ApproxResult:
    value: int
    eps: Fraction
    decider_calls: int
    method_counts: dict = field(default_factory=dict)

    @property
    def lower_bound(self) -> Fraction:
        return Fraction(self.value) / (1 + self.eps)


def alpha_star(eps, n: int, lam: int, d: int) -> float:
    """Simplification radius where the two decider methods cost the same.

    Natural log; ``ln n`` is clamped to 1 so tiny curves keep a finite value.
    """
    log_n = max(math.log(n), 1.0)
    return (float(eps) ** (d - 1) * n / (log_n * lam)) ** (1.0 / d)


def select_method(alpha, eps, n: int, lam: int, d: int) -> MethodChoice:
    if eps <= 0 or n < 1 or lam < 1 or d < 1:
        raise ValueError("select_method needs eps > 0, n >= 1, lam >= 1, d >= 1")
    a_star = alpha_star(eps, n, lam, d)
    effective = max(Fraction(alpha), Fraction(1))
    kind = Method.SIMPLIFIED_DP if effective >= a_star else Method.SWITCHING_CELLS
    return MethodChoice(kind, a_star)


def approx_decide(
    P: GridWalk,
    Q: GridWalk,
    delta: int,
    eps,
    metric: Metric = Metric.L1,
    force_method: Optional[Method] = None,
) -> DeciderOutcome:
    """Certify either ``dist(P, Q) <= (1 + eps) delta`` (LE) or ``dist(P, Q) > delta`` (GT).

    Both curves are simplified with radius ``alpha = delta * eps / 4``; each
    simplification moves the distance by at most ``alpha``, so comparing the
    simplified curves against ``floor((1 + eps / 2) delta)`` separates the two
    cases.
    """
    if P.dimension != Q.dimension:
        raise DimensionMismatch(f"dimension mismatch: {P.dimension} vs {Q.dimension}")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    delta = int(delta)
    if delta < 0:
        return DeciderOutcome(Verdict.GT)
    alpha = delta * eps / 4
    threshold = math.floor((1 + eps / 2) * delta)
    P_a, T_P = simplify(P, alpha, metric)
    Q_a, T_Q = simplify(Q, alpha, metric)
    if force_method is None:
        n = max(P.n, Q.n)
        lam = max(P.multiplicity, Q.multiplicity)
        method = select_method(alpha, eps, n, lam, P.dimension).kind
    else:
        method = force_method

    if method is Method.SIMPLIFIED_DP:
        ok = exact_decide(P_a, Q_a, threshold, metric)
    else:
        ok = freespace_decide(P, Q, P_a, Q_a, (T_P, T_Q), (None, None), threshold, metric)
    return DeciderOutcome(Verdict.LE if ok else Verdict.GT, method)


def _inner_eps(eps: Fraction) -> Fraction:
    # (1 + inner)^2 <= 1 + eps keeps every LE step shrinking the bracket
    return min(eps / 3, Fraction(1))


def approx_distance(
    P: GridWalk,
    Q: GridWalk,
    eps,
    metric: Metric = Metric.L1,
    force_method: Optional[Method] = None,
) -> ApproxResult:
    """An integer ``v`` with ``dist(P, Q) <= v <= (1 + eps) dist(P, Q)``.

    The answer is bracketed as ``lo < d <= U``.  Probing the geometric mean
    ``probe`` of ``lo + 1`` and ``U`` with a ``(1 + inner)``-decider either lifts
    ``lo`` to ``probe`` or drops ``U`` to ``floor((1 + inner) probe)``; the search
    stops once ``U <= (1 + eps)(lo + 1)``, and since ``d >= lo + 1`` that ``U``
    is the answer.  With ``(1 + inner)^2 <= 1 + eps`` an unfinished bracket always
    shrinks, and the log-ratio of the bracket roughly halves per probe.
    """
    if P.dimension != Q.dimension:
        raise DimensionMismatch(f"dimension mismatch: {P.dimension} vs {Q.dimension}")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    inner = _inner_eps(eps)
    counts = {Method.SIMPLIFIED_DP: 0, Method.SWITCHING_CELLS: 0}
    calls = 0

    def decide(delta: int) -> bool:
        nonlocal calls
        calls += 1
        out = approx_decide(P, Q, delta, inner, metric, force_method)
        if out.method is not None:
            counts[out.method] += 1
        return out.verdict is Verdict.LE

    d0 = distance(P[0], Q[0], metric)
    # every pair of vertices is within n + m steps of (p_0, q_0)
    lower = max(0, d0 - P.n - Q.n)
    upper = d0 + P.n + Q.n

    if decide(0):
        return ApproxResult(0, eps, calls, counts)
    lo = max(lower - 1, 0)  # invariant: d > lo
    U = upper  # invariant: d <= U
    while U > (1 + eps) * (lo + 1):
        probe = math.isqrt((lo + 1) * U)
        if decide(probe):
            U = math.floor((1 + inner) * probe)
        else:
            lo = probe
    return ApproxResult(U, eps, calls, counts)


def decider_call_budget(n: int, m: int, eps) -> float:
    eps = Fraction(eps)
    extra = 10 * math.log2(1 / eps) if eps < 1 else 0.0
    return 2 * math.log2(n + m) + extra + 5


def bisect_walk(P: GridWalk) -> GridWalk:
    """Double every coordinate and insert the midpoint of every edge."""
    v = P.vertices * 2
    if P.n == 1:
        return GridWalk(v)
    out = np.empty((2 * P.n - 1, P.dimension), dtype=np.int64)
    out[0::2] = v
    out[1::2] = (v[:-1] + v[1:]) // 2
    return GridWalk(out)


def continuous_distance(
    P: GridWalk, Q: GridWalk, eps, metric: Metric = Metric.L1
) -> Fraction:
    """(1 + eps)-approximate continuous Fréchet distance under l1 or l-inf.

    On the bisected curves the discrete and continuous distances agree, and
    bisection doubles every distance, so the discrete approximation is halved.
    """
    if metric not in (Metric.L1, Metric.LINF):
        raise ValueError("continuous distance is supported for l1 and l-inf only")
    res = approx_distance(bisect_walk(P), bisect_walk(Q), eps, metric)
    return Fraction(res.value, 2)
