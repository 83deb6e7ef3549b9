import functools

import numpy as np
import pytest

from avlrc.ambient import GridSpec, build_delta
from avlrc.analysis import analyze, preset_codes
from avlrc.galois import make_tower
from avlrc.tables import get_preset


@functools.lru_cache(maxsize=None)
def table_codes(table_id):
    return preset_codes(get_preset(table_id))


@functools.lru_cache(maxsize=None)
def table_analysis(table_id):
    return [analyze(avc) for avc in table_codes(table_id)]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def f8_f64():
    return make_tower(2, 3, 6)


@pytest.fixture(scope="session")
def worked_grid():
    # q=8, Q=64, N=(8,10), J = {first axis}
    return GridSpec(8, 64, (8, 10), {0})


@pytest.fixture(scope="session")
def worked_deltas(worked_grid):
    d1 = build_delta(worked_grid, [(1, 2), (2, 3)])
    d2 = list(d1.elements) + [(1, 3)]
    return d1, d2


VERDICTS: list[str] = []


def verdict(label, ok, detail=""):
    """Record and print one acceptance line."""
    line = f"{label}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    VERDICTS.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
