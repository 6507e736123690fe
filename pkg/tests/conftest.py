import pytest

from frictionlab.analysis import ScanGrid, reference_solution, reproduce_table2


@pytest.fixture(scope="session")
def default_grid():
    return ScanGrid()


@pytest.fixture(scope="session")
def default_reference(default_grid):
    return reference_solution(default_grid)


@pytest.fixture(scope="session")
def table2(default_grid):
    return reproduce_table2(default_grid)


@pytest.fixture(scope="session")
def small_grid():
    return ScanGrid(24, 17)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
