import pytest

from trispec.explorer import enumerate_classes
from trispec.graph import from_graph6

ACCEPTANCE_RESULTS: dict[str, list[bool]] = {}


@pytest.fixture(scope="session")
def graphs_upto7():
    return [from_graph6(c) for n in range(1, 8) for c in enumerate_classes(n)]


def _criterion(item) -> str | None:
    mark = item.get_closest_marker("criterion")
    return str(mark.args[0]) if mark else None


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number this test gates")
    config.addinivalue_line("markers", "slow: long-running exhaustive check")


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when != "call" and not report.failed:
        return
    ACCEPTANCE_RESULTS.setdefault(crit, []).append(report.passed)


def pytest_runtest_setup(item):
    crit = _criterion(item)
    if crit is not None:
        item.user_properties.append(("criterion", crit))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE_RESULTS, key=int):
        results = ACCEPTANCE_RESULTS[crit]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {status} ({sum(results)}/{len(results)} checks passed)")
