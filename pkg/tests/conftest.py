import pytest

from geohit.hypergraph import fano_plane, from_abstract


@pytest.fixture
def fano():
    return fano_plane()


@pytest.fixture
def disjoint4():
    return from_abstract(8, [[0, 1], [2, 3], [4], [5, 6, 7]])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Log one acceptance line; printed in the terminal summary."""

    def _record(criterion: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
