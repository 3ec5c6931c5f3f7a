"""Runtime scaling harness: CSV records and log-log slope fits."""

from __future__ import annotations

import csv
import gc
import io
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

import numpy as np

from .approx import approx_distance
from .core import GridWalk, Metric
from .exact import exact_distance
from .generators import Sign, band_signal_instance, random_lambda_walk

HEADER = ("d", "n", "m", "lambda", "eps", "algo", "value", "decider_calls", "wall_time_ns", "seed")


@dataclass(frozen=True)
class BenchRecord:
    d: int
    n: int
    m: int
    lam: int
    eps: Fraction
    algo: str
    value: int
    decider_calls: int
    wall_time_ns: int
    seed: int
    size: int = 0  # nominal size requested; not written to CSV

    def row(self) -> List[str]:
        return [
            str(self.d),
            str(self.n),
            str(self.m),
            str(self.lam),
            str(self.eps),
            self.algo,
            str(self.value),
            str(self.decider_calls),
            str(self.wall_time_ns),
            str(self.seed),
        ]


def make_instance(kind: str, d: int, n: int, lam: int, seed: int):
    if kind == "random":
        return random_lambda_walk(d, n, lam, seed), random_lambda_walk(d, n, lam, seed + 1_000_003)
    if kind == "band":
        P = band_signal_instance(d, n, lam, seed, Sign.POSITIVE)
        Q = band_signal_instance(d, n, lam, seed + 1_000_003, Sign.NEGATIVE)
        return P, Q
    raise ValueError(f"unknown instance kind {kind!r}")


_warm = False


def _warm_up() -> None:
    # compile the kernels outside any timed region
    global _warm
    if not _warm:
        P, Q = random_lambda_walk(2, 16, 1, 0), random_lambda_walk(2, 16, 1, 1)
        exact_distance(P, Q)
        approx_distance(P, Q, Fraction(1, 2))
        _warm = True


def run_one(P: GridWalk, Q: GridWalk, algo: str, eps: Fraction, metric: Metric, repeats: int = 1):
    """Value, decider calls and the best wall time over ``repeats`` runs."""
    best = None
    # like timeit, keep collector pauses out of the timed region
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(max(repeats, 1)):
            start = time.perf_counter_ns()
            if algo == "exact":
                value, calls = exact_distance(P, Q, metric), 0
            else:
                res = approx_distance(P, Q, eps, metric)
                value, calls = res.value, res.decider_calls
            ns = time.perf_counter_ns() - start
            best = ns if best is None else min(best, ns)
    finally:
        if enabled:
            gc.enable()
    return value, calls, best


def run_bench(
    d: int,
    eps,
    lam: int,
    sizes: Sequence[int],
    seeds: int,
    algo: str = "both",
    instances: str = "random",
    metric: Metric = Metric.L1,
    repeats: int = 1,
) -> List[BenchRecord]:
    eps = Fraction(eps)
    algos = ["exact", "approx"] if algo == "both" else [algo]
    _warm_up()
    out = []
    for size in sizes:
        for seed in range(seeds):
            P, Q = make_instance(instances, d, size, lam, seed)
            for a in algos:
                value, calls, ns = run_one(P, Q, a, eps, metric, repeats)
                out.append(BenchRecord(d, P.n, Q.n, lam, eps, a, value, calls, ns, seed, size))
    return out


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for r in records:
        writer.writerow(r.row())
    return buf.getvalue()


def fit_loglog_slope(records: Iterable[BenchRecord], algo: str) -> float:
    """Least-squares slope of log2(median wall time) against log2(median sqrt(n m)).

    Records are grouped by nominal size; the x value of a group is the actual
    geometric-mean length, since generated walks can overshoot the request.
    """
    by_size: Dict[int, List[BenchRecord]] = {}
    for r in records:
        if r.algo == algo:
            by_size.setdefault(r.size or r.n, []).append(r)
    if len(by_size) < 2:
        return float("nan")
    groups = [by_size[s] for s in sorted(by_size)]
    xs = np.log2([statistics.median((r.n * r.m) ** 0.5 for r in g) for g in groups])
    ys = np.log2([max(statistics.median(r.wall_time_ns for r in g), 1) for g in groups])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)
