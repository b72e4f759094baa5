"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

_outcomes: dict[str, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes.setdefault(name, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_outcomes, key=lambda s: int(s.split()[0][1:])):
        verdict = "PASS" if all(_outcomes[name]) else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
