import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or not any(n == name for n, _ in _acceptance):
            _acceptance.append((name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _acceptance:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
