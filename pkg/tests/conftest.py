import pytest

ACCEPTANCE_LINES = {}


def record(criterion: int, ok: bool, detail: str = ""):
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES[criterion] = line
    print(line)
    return ok


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
