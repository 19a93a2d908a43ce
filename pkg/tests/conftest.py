import contextlib
import time

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def record(number, title):
        t0 = time.perf_counter()
        notes = []
        try:
            yield notes
        except BaseException:
            ACCEPTANCE_LINES.append(f"criterion {number}: FAIL  {title} ({time.perf_counter() - t0:.2f}s)")
            raise
        detail = f"; {'; '.join(notes)}" if notes else ""
        ACCEPTANCE_LINES.append(f"criterion {number}: PASS  {title} ({time.perf_counter() - t0:.2f}s{detail})")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
