from __future__ import annotations

from pathlib import Path

import pytest

from cubicsoft.document import load_cubic_soft_set

FIXTURES = Path(__file__).parent / "fixtures"

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load(name: str):
    return load_cubic_soft_set(fixture_path(name).read_text(encoding="utf-8"))


@pytest.fixture
def fx():
    return load


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
