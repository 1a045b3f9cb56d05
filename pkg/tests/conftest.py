import itertools

import pytest


def brute_standardize(word):
    # rank of each entry = number of entries not larger than it
    return tuple(sum(1 for y in word if y <= x) for x in word)


@pytest.fixture
def perms_of():
    return lambda n: list(itertools.permutations(range(1, n + 1)))


# acceptance bookkeeping: one line per criterion in the terminal summary
CRITERIA: dict[str, tuple[bool, str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker and report.when == "call":
        CRITERIA[marker] = (report.passed, report.nodeid.split("::")[-1])


import pytest as _pytest


@_pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark:
        rep.criterion = mark.args[0]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id): acceptance criterion id")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: [int(p) if p.isdigit() else p for p in k.replace("-", ".").split(".")]):
        ok, name = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key:<10} {'PASS' if ok else 'FAIL'}  {name}")
