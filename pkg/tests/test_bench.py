import math
from fractions import Fraction

import pytest

from gridfrechet.bench import HEADER, BenchRecord, fit_loglog_slope, make_instance, run_bench, run_one, to_csv
from gridfrechet.core import Metric


def _rec(size, ns, algo="exact", seed=0):
    return BenchRecord(3, size, size, 1, Fraction(1, 2), algo, 0, 0, ns, seed, size)


def test_slope_of_exact_power_law():
    records = [_rec(s, s**2 * 10 + k, seed=k) for s in (64, 128, 256, 512) for k in range(3)]
    assert fit_loglog_slope(records, "exact") == pytest.approx(2.0, abs=1e-3)
    assert math.isnan(fit_loglog_slope(records[:3], "exact"))
    assert math.isnan(fit_loglog_slope(records, "approx"))


def test_slope_uses_medians():
    records = [_rec(s, ns) for s in (100, 200) for ns in (s, s, 10**12)]
    assert fit_loglog_slope(records, "exact") == pytest.approx(1.0)


def test_csv_layout():
    text = to_csv([_rec(8, 123)])
    assert text.splitlines()[0] == ",".join(HEADER)
    assert text.splitlines()[1] == "3,8,8,1,1/2,exact,0,0,123,0"


def test_instances_are_seeded():
    for kind in ("random", "band"):
        P1, Q1 = make_instance(kind, 3, 300, 1, 4)
        P2, Q2 = make_instance(kind, 3, 300, 1, 4)
        assert P1 == P2 and Q1 == Q2 and P1 != Q1
    with pytest.raises(ValueError):
        make_instance("spiral", 3, 10, 1, 0)


def test_run_bench_values_agree():
    records = run_bench(3, Fraction(1, 2), 1, [256], 2, "both", "band")
    assert len(records) == 4
    for e, a in zip(records[::2], records[1::2]):
        assert e.value <= a.value <= Fraction(3, 2) * e.value


def test_slope_uses_actual_lengths():
    # nominal sizes double but the walks do not: time follows sqrt(n m)
    records = [BenchRecord(3, 2 * s, 2 * s, 1, Fraction(1, 2), "exact", 0, 0, (2 * s) ** 2, 0, s) for s in (64, 256)]
    records += [BenchRecord(3, 2 * s, 2 * s, 1, Fraction(1, 2), "exact", 0, 0, (2 * s) ** 2, 0, s) for s in (1024,)]
    assert fit_loglog_slope(records, "exact") == pytest.approx(2.0)


def test_run_one_repeats_keep_value():
    P, Q = make_instance("random", 2, 200, 1, 0)
    assert run_one(P, Q, "exact", Fraction(1, 2), Metric.L1, 3)[:2] == run_one(P, Q, "exact", Fraction(1, 2), Metric.L1)[:2]
