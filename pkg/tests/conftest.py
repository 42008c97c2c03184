import pytest

from ringlab.expr import evaluate, evaluate_constructed


@pytest.fixture(scope="session")
def ring():
    """Look up a ring by expression, e.g. ``ring("T2(Z2)")``."""
    return evaluate


@pytest.fixture(scope="session")
def constructed():
    return evaluate_constructed


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
