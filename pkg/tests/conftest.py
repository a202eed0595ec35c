"""Shared pytest plumbing: collects one line per acceptance criterion and
prints the lot in the terminal summary, so a plain `pytest -v` run shows
every PASS/FAIL verdict even with output capture on."""

ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
