import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20110701)


PAPER_WORD = (2, 1, 3, 5, 1, 2, 6)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
