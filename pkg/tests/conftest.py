import pathlib
import re
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results[int(m.group(1))] = (m.group(2).replace("_", " "), report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        title, passed, duration = _results[k]
        terminalreporter.write_line(
            f"criterion {k} ({title}): {'PASS' if passed else 'FAIL'} [{duration:.2f} s]")
