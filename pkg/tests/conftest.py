import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from jordantype.algebra import from_description  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_criteria: dict[int, dict] = {}


def load_description(name: str) -> dict:
    return json.loads((FIXTURES / f"{name}.json").read_text())


def load_algebra(name: str, **params):
    return from_description(load_description(name), params)


@pytest.fixture
def fixture_algebra():
    return load_algebra


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True})
    if report.failed or (report.when == "call" and report.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {entry['title']}")
