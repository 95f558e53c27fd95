"""Prints one PASS/FAIL line per acceptance criterion at the end of a
run, so the gate's verdict is visible even with output capture on."""

import pytest

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = getattr(getattr(item, "function", None), "acceptance", None)
    if mark is not None and rep.when == "call":
        _RESULTS[mark[0]] = (rep.passed, rep.duration, mark[1])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_RESULTS):
        passed, duration, title = _RESULTS[num]
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {num:2d}: {word}  {duration:8.1f}s  {title}"
        )
