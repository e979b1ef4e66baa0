"""Shared pytest wiring for the suite.

The acceptance tests record one line per criterion here; the hook below
replays them after the run so they stay visible despite output capture.
"""

acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
