import pytest

from rigdim import fixtures

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def algebras():
    return {name: make() for name, make in fixtures.FIXTURES.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
