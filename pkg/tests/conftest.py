import pytest

# filled by tests/test_acceptance.py; one (criterion, passed, seconds) per entry
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for name, ok, secs in ACCEPTANCE_LINES:
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}: {name} ({secs:.1f}s)")


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
