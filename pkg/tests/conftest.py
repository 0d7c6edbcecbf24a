import numpy as np
import pytest

from supercavity import preset_params

_CRITERIA = []


@pytest.fixture(params=["node-antinode", "antinode-node"])
def configuration(request):
    return request.param


@pytest.fixture
def fig2(configuration):
    return preset_params("fig2", configuration)


@pytest.fixture
def fig3(configuration):
    return preset_params("fig3", configuration)


@pytest.fixture
def rng():
    return np.random.default_rng(20161015)


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(label, ok, detail)``."""

    def record(label, ok, detail=""):
        _CRITERIA.append((label, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
