import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from gridfrechet import GridWalk, random_lambda_walk

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def shifted(w: GridWalk, offset) -> GridWalk:
    return GridWalk(w.vertices + np.asarray(offset, dtype=np.int64))


def random_pair(rng, d, n_max, lam=1, n_min=1, spread=3):
    """Two random lambda-walks with a random relative offset."""
    n = int(rng.integers(n_min, n_max + 1))
    m = int(rng.integers(n_min, n_max + 1))
    P = random_lambda_walk(d, n, lam, int(rng.integers(2**31)))
    Q = random_lambda_walk(d, m, lam, int(rng.integers(2**31)))
    return P, shifted(Q, rng.integers(-spread, spread + 1, size=d))


def straight_line(n, d=2, y=0):
    v = np.zeros((n, d), dtype=np.int64)
    v[:, 0] = np.arange(n)
    v[:, 1] = y
    return GridWalk(v)


# acceptance results collected during the run and printed at the end
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
