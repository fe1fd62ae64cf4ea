import math

import pytest

from segre import ghz, new_state, w_state

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def bell():
    r = 1 / math.sqrt(2)
    return new_state((2, 2), [((1, 1), r), ((2, 2), r)])


@pytest.fixture
def ghz3():
    return ghz(3, 2)


@pytest.fixture
def ghz4():
    return ghz(4, 2)


@pytest.fixture
def w3():
    return w_state(3)


ORACLE_SHAPES = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 3, 2), (3, 3, 3), (2, 2, 2, 2)]
