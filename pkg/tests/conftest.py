import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line("%s  %s" % ("PASS" if outcome == "passed" else "FAIL", name))


@pytest.fixture
def b0():
    from gassner import parse_word
    return parse_word("1 -3 2", 4)
