"""Shared fixtures and the per-criterion summary for the acceptance suite."""

import pytest

CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    passed, _ = CRITERIA.get(num, (True, title))
    if report.failed or (report.when == "call" and report.skipped):
        passed = False
    CRITERIA[num] = (passed, title)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        passed, title = CRITERIA[num]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {num:2d}: {title}")
