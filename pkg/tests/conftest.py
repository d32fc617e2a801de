"""Shared fixtures and the per-criterion acceptance summary."""
from collections import OrderedDict

import pytest

from porder import PAdicContext

_criteria = OrderedDict()


@pytest.fixture
def z8():
    return PAdicContext(2, 3)


@pytest.fixture
def z16():
    return PAdicContext(2, 4)


def pytest_runtest_logreport(report):
    # a test counts once its call phase finishes, or earlier if setup breaks
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            number, title = value
            entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": []})
            if report.passed:
                entry["passed"] += 1
            elif report.failed:
                entry["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {number} {status}: {entry['title']} ({entry['passed']} passed"
        if entry["failed"]:
            line += f", failing: {', '.join(entry['failed'])}"
        terminalreporter.write_line(line + ")")
