"""Shared test plumbing: the acceptance summary block.

Acceptance tests record one pass/fail line each; the lines are replayed
in a dedicated section after the run so the verdict survives pytest's
output capture.
"""

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record (and print) a one-line verdict for an acceptance criterion."""

    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
