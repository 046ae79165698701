import re

import pytest

from ordspace.exact import OrderParam
from ordspace.groups import F1Group, GnGroup, TowerGroup
from ordspace.orders import LexOrdering, ReverseOrdering, SmirnovOrdering

_CRITERION = re.compile(r"test_criterion_(\d+)_")


@pytest.fixture(scope="session")
def f1():
    return F1Group(2)


@pytest.fixture(scope="session")
def klein():
    return TowerGroup.klein()


@pytest.fixture(scope="session")
def g2():
    return GnGroup(2)


@pytest.fixture(scope="session")
def c_orders(f1):
    """C1..C4 keyed by index."""
    return {
        1: LexOrdering(f1, (1, 1)),
        2: LexOrdering(f1, (-1, 1)),
        3: LexOrdering(f1, (-1, -1)),
        4: LexOrdering(f1, (1, -1)),
    }


@pytest.fixture(scope="session")
def f1_shapes(f1, c_orders):
    """The eight F1 oracle shapes: four Conradian, two Smirnov, two reversals."""
    s1 = SmirnovOrdering(f1, OrderParam.above(3))
    s2 = SmirnovOrdering(f1, OrderParam.below(-1))
    return [*c_orders.values(), s1, s2, ReverseOrdering(s1), ReverseOrdering(s2)]


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = _CRITERION.search(nodeid)
            if "test_acceptance" not in nodeid or not m or rep.when != "call" and outcome != "error":
                continue
            n = int(m.group(1))
            ok = rows.get(n, True) and outcome == "passed"
            rows[n] = ok
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(rows):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if rows[n] else 'FAIL'}")
