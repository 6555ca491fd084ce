from pathlib import Path

import pytest

from subconj import LocalRule, MORSE, TOEPLITZ, power
from oracles import parity

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def morse():
    return MORSE


@pytest.fixture
def toeplitz():
    return TOEPLITZ


@pytest.fixture
def morse2():
    return power(MORSE, 2)


@pytest.fixture
def parity3():
    return LocalRule.from_function(parity, "01", memory=1, anticipation=1)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = mark.args
        item.config._criteria[number] = (title, report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter, config):
    criteria = getattr(config, "_criteria", {})
    if not criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(criteria):
        title, outcome, duration = criteria[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"AC{number} {verdict} ({duration:.2f}s) {title}")
