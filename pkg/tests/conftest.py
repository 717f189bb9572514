from __future__ import annotations

import pytest

from rlematch.rle import PatternSet, rle

REF_PATTERNS = ["a5 b1", "a5 b3 a2", "a5 b3 a1", "a3 b3 a1", "b2 a1", "b2"]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def ref_patterns() -> PatternSet:
    """The six patterns of the reference instance used across the tests, ids 1..6 in this order."""
    return PatternSet.from_strings([rle(p) for p in REF_PATTERNS])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
