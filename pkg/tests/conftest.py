import pytest

# lines appended by the acceptance suite, echoed after the run
CRITERIA: list[str] = []


@pytest.fixture(scope="session")
def criteria_log():
    return CRITERIA


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(CRITERIA):
        terminalreporter.write_line(line)
