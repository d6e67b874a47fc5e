"""Shared fixtures plus the per-criterion pass/fail summary for the
acceptance suite."""
import os
from collections import OrderedDict

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call" and not (call.when == "setup" and call.excinfo):
        return
    num, title = mark.args
    entry = _CRITERIA.setdefault(num, {"title": title, "ok": True, "tests": 0, "notes": []})
    entry["tests"] += 1
    if call.excinfo is not None:
        entry["ok"] = False
    entry["notes"].extend(getattr(item, "_criterion_notes", []))


@pytest.fixture
def note(request):
    """Attach a line of detail to the acceptance summary for this test."""
    notes = []
    request.node._criterion_notes = notes
    return notes.append


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        e = _CRITERIA[num]
        status = "PASS" if e["ok"] else "FAIL"
        tr.write_line(f"criterion {num:2d}: {status}  {e['title']} ({e['tests']} checks)")
        for line in e["notes"]:
            tr.write_line(f"              {line}")
