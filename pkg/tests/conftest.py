import numpy as np
import pytest

from mixbar import PointCloud, build_rips_pair, parse_explicit_pair

# Two 1-cells with empty boundary (two loops), filled from the ambient side
# first (cells 3, 4) and then inside the subcomplex (cells 5, 6).
SIX_CELL = """\
1 1 1.0 L
2 1 2.0 L
3 2 3.0 K 2
4 2 4.0 K 1
5 2 5.0 L 1 2
6 2 6.0 L 1
"""


@pytest.fixture
def six_cell_pair():
    return parse_explicit_pair(SIX_CELL)


@pytest.fixture
def square_center_pair():
    """Unit square corners as A, the center point as B."""
    a = PointCloud(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))
    b = PointCloud(np.array([[0.5, 0.5]]))
    return build_rips_pair(a, b, r_max=2.0, k_max=2)


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and getattr(rep, "when", "call") == "call":
                rows.append((nodeid.split("::")[-1], outcome))
    if not rows:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in sorted(rows):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
