import pytest

_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def record(number, name, ok, detail=""):
        _LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name}  {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
