import pytest

from twoterm.potential import ScaledParams


@pytest.fixture
def two_term():
    return ScaledParams(4.0, 2.0, 1.0)


@pytest.fixture
def hulthen100():
    return ScaledParams(100.0, 0.0, 1.0)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
