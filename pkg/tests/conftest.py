import pytest

_RESULTS: list = []


@pytest.fixture
def acceptance():
    """Record one acceptance line; the test still asserts on its own outcome."""

    def record(label: str, passed: bool, detail: str = "") -> bool:
        line = f"ACCEPTANCE {label}: {'PASS' if passed else 'FAIL'}" + (f" ({detail})" if detail else "")
        _RESULTS.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)
