import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homcert import kernels  # noqa: E402

GRID = [(r, n) for r in (1, 2, 3) for n in (3, 4, 5)] + [(4, 3)]

BACKENDS = ["python"] + (["cython"] if kernels.compiled_available() else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return kernels.backend_module(request.param)


_acceptance: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(criterion, title): exit criterion check")


def pytest_runtest_logreport(report):
    crit = getattr(report, "_criterion", None)
    if crit is None or not (report.when == "call" or report.failed):
        return
    number, title = crit
    entry = _acceptance.setdefault(number, {"title": title, "passed": 0, "failed": 0})
    entry["failed" if report.failed else "passed"] += 1


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result()._criterion = (marker.kwargs["criterion"], marker.kwargs["title"])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        e = _acceptance[number]
        status = "FAIL" if e["failed"] else "PASS"
        total = e["passed"] + e["failed"]
        terminalreporter.write_line(f"criterion {number}: {status} ({e['passed']}/{total} checks)  {e['title']}")
