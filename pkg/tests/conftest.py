import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from quiverdim.algebra import Quiver, Relation, bound_quiver_algebra, poset_from_covers
from quiverdim.linalg import QQ


def poset(text, elements=None):
    """Poset from ``"a<b b<c"`` shorthand."""
    covers = [tuple(c.split("<")) for c in text.split()]
    return poset_from_covers(elements, covers)


def a_n(n, field=QQ):
    q = Quiver.build([str(i) for i in range(n + 1)], [(f"a{i}", str(i - 1), str(i)) for i in range(1, n + 1)])
    return bound_quiver_algebra(q, [Relation.monomial(f"a{i}", f"a{i + 1}") for i in range(1, n)], field)


@pytest.fixture
def make_poset():
    return poset


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[1]
        num = int(name.split("_")[2])
        for line in report.capstdout.splitlines():
            if line.startswith("criterion "):
                _CRITERIA[f"{num:02d}"] = line
                break
        else:
            prev = _CRITERIA.get(f"{num:02d}", "")
            if not report.passed or not prev:
                _CRITERIA[f"{num:02d}"] = f"criterion {num}: {'PASS' if report.passed else 'FAIL'} {name}"


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for key in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[key])
