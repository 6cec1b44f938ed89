import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_labels = {}
_outcomes = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion")


def pytest_itemcollected(item):
    if item.nodeid.startswith("tests/test_acceptance.py") or "test_acceptance.py" in item.nodeid:
        _labels[item.nodeid] = (item.function.__doc__ or item.name).strip()


def pytest_runtest_logreport(report):
    if report.nodeid in _labels and (report.when == "call" or report.failed):
        _outcomes.append((report.nodeid, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, passed in _outcomes:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {_labels[nodeid]}")
