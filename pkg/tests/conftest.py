import pytest

from rinehart.instances import builtin
from rinehart.split import extract_split

ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def pairs():
    return {name: builtin(name) for name in ("B0", "B1", "B2", "B3", "B3sum")}


@pytest.fixture(scope="session")
def splits(pairs):
    return {name: extract_split(pairs[name]) for name in ("B3", "B3sum")}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
