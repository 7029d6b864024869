import time

import pytest
from hypothesis import settings

# first calls pay numba compilation
settings.register_profile("orientseq", deadline=None)
settings.load_profile("orientseq")

_criteria: dict[str, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    num, title = mark.args
    entry = _criteria.setdefault(num, {"title": title, "ok": True, "seconds": 0.0, "tests": []})
    if rep.when == "call":
        entry["seconds"] += rep.duration
        entry["tests"].append(item.name)
    if rep.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        e = _criteria[num]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {num} {verdict:4s} {e['seconds']:7.2f}s  {e['title']} ({len(e['tests'])} checks)"
        )


@pytest.fixture
def stopwatch():
    class Watch:
        def __enter__(self):
            self.t0 = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.t0

    return Watch
