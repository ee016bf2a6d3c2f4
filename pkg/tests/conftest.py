import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_results = {}


def pytest_addoption(parser):
    parser.addoption("--full-sweep", action="store_true", default=False, help="run exhaustive sweeps marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--full-sweep"):
        return
    skip = pytest.mark.skip(reason="exhaustive sweep; pass --full-sweep")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker is None:
        return
    number, title = item_marker
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _results[(number, report.nodeid)] = (status, title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, nodeid), (status, title) in sorted(_results.items()):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}  ({nodeid.split('::')[-1]})")
