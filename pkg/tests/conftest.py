import pytest

_CRITERIA: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(i, ok, detail)``."""

    def record(i, ok, detail=""):
        line = f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _CRITERIA[i] = ("PASS" if ok else "FAIL", line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[i][1])
