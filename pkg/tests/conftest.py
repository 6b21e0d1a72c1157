"""Shared pytest hooks: surface the acceptance-criterion result lines.

test_acceptance.py appends one "PASS/FAIL criterion NN: ..." line per
criterion to ACCEPTANCE_LINES; printing them from the terminal-summary hook
bypasses pytest's capture so they always reach the console.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
