import pytest

from gbds.fixtures import FIXTURES

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=sorted(FIXTURES))
def fixture_sys(request):
    return FIXTURES[request.param]()


@pytest.fixture
def F1():
    return FIXTURES["F1"]()


@pytest.fixture
def F2():
    return FIXTURES["F2"]()


@pytest.fixture
def F3():
    return FIXTURES["F3"]()


@pytest.fixture
def F4():
    return FIXTURES["F4"]()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
