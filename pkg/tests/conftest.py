import sys
import numpy as np
import pytest

from fuzzyedm import Rule


@pytest.fixture
def bench_rule():
    return Rule([1, 0.3, 0, 0, 0], [0, 0, 0, 0, 0, 0.3, 1])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
