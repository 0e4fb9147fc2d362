import re

import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    if report.when == "call" or report.outcome != "passed":
        state = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        previous = _RESULTS.get(key)
        if previous != "FAIL":
            _RESULTS[key] = state


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    def order(item):
        number = str(item[0][0])
        return int(re.match(r"\d+", number).group()), number

    for (number, title), state in sorted(_RESULTS.items(), key=order):
        terminalreporter.write_line(f"criterion {str(number):>3}: {state}  {title}")
