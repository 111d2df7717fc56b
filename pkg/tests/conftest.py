import pytest

from tests.helpers import ACCEPTANCE_LINES, DUMBBELL


@pytest.fixture
def dumbbell():
    return DUMBBELL.copy()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
