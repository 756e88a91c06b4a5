from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA: dict = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion test."""

    def _register(number: int, title: str):
        CRITERIA[number] = (title, request.node)

    return _register


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        item._criterion_outcome = rep.outcome


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, node = CRITERIA[number]
        status = getattr(node, "_criterion_outcome", "failed")
        mark = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] criterion {number}: {title}")
