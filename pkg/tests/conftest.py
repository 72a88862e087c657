import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fermat_descent.equation import FermatEquation, Triplet  # noqa: E402

# the paper's worked examples: (equation, known solution or None)
EX1 = FermatEquation(123, 125, 121, 5)
EX2 = FermatEquation(2, 9, 11, 5)
EX3 = FermatEquation(16, 9, 7, 5)
SOL2 = Triplet(1, 1, -1)
SOL3 = Triplet(1, -1, -1)


@pytest.fixture
def ex2():
    return EX2


@pytest.fixture
def ex3():
    return EX3


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
