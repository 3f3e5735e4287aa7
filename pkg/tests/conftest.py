from __future__ import annotations

import pytest

_VERDICTS: list[str] = []


@pytest.fixture
def verdict():
    """Record and print one acceptance line; the test asserts on the outcome itself."""

    def record(number: int, ok: bool, detail: str = "", info: bool = False) -> bool:
        tag = "INFO" if info else ("PASS" if ok else "FAIL")
        line = f"criterion {number}: {tag}" + (f"  ({detail})" if detail else "")
        _VERDICTS.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in _VERDICTS:
            terminalreporter.write_line(line)
