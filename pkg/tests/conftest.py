import re

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_CRITERION = re.compile(r"test_criterion_(\d+)_")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or report.when not in ("setup", "call"):
        return
    k = int(m.group(1))
    if report.failed:
        _results[k] = "FAIL"
    elif report.when == "call" and report.passed:
        _results.setdefault(k, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        terminalreporter.write_line(f"criterion {k}: {_results[k]}")


@pytest.fixture(scope="session")
def small_cases():
    """(family, m, n) triples with m + n <= 5."""
    from weylgrpd.families import FAMILIES

    out = []
    for fam in FAMILIES:
        for s in range(2, 6):
            for m in range(1, s):
                if fam == "gl" and m != s - m:
                    continue
                out.append((fam, m, s - m))
    return out
