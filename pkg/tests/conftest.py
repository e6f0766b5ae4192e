import pytest
from hypothesis import strategies as st

from partition_landscape import Partition

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("acceptance")
    if label is not None:
        _acceptance.append((label, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_acceptance, key=lambda item: int(item[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")


@pytest.fixture(autouse=True)
def _tag_acceptance(request, record_property):
    marker = request.node.get_closest_marker("acceptance")
    if marker is not None:
        label = marker.args[0]
        if hasattr(request.node, "callspec"):
            label += f" [{request.node.callspec.id}]"
        record_property("acceptance", label)


partitions_st = st.lists(st.integers(1, 12), min_size=1, max_size=12).map(Partition.from_parts)


def flat_partitions(n, largest=None):
    """Naive recursive generator in descending lex order; independent of the library."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in flat_partitions(n - k, k):
            yield (k,) + rest


def coin_change_count(n):
    """p(n) by the standard parts-bounded DP."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]
