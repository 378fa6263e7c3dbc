"""Shared test configuration: the acceptance-line report.

Acceptance tests record one line per criterion through the record_criterion
fixture; the collected lines are printed as a dedicated section at the end of
the run so the verdicts survive any amount of pytest output above them.
"""

import pytest

_LINES: list[tuple[int, str]] = []


@pytest.fixture(scope="session")
def record_criterion():
    """Returns record(num, ok, detail): logs the verdict line, then asserts."""

    def record(num: int, ok: bool, detail: str) -> None:
        verdict = "PASS" if ok else "FAIL"
        _LINES.append((num, f"criterion {num:02d}: {verdict} {detail}"))
        assert ok, f"criterion {num:02d} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
