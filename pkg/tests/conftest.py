import pytest

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""
    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        _CRITERIA[number] = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (
            f" -- {detail}" if detail else "")
        print(_CRITERIA[number])
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])
