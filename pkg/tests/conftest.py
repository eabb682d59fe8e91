from pathlib import Path

import pytest

from symmetrizer import load_fixture

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def fixture_paths():
    return sorted(FIXTURES.glob("*.poly"))


@pytest.fixture(scope="session")
def corpus():
    return {p.stem: load_fixture(p) for p in fixture_paths()}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key = (mark.args[0], mark.args[1])
    results = item.config._acceptance
    if rep.when == "call" or rep.failed:
        results[key] = results.get(key, True) and rep.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config._acceptance
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), ok in sorted(results.items()):
        terminalreporter.write_line(f"criterion {num:2}: {'PASS' if ok else 'FAIL'}  {title}")
