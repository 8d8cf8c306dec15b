from fractions import Fraction

import pytest
from hypothesis import assume, strategies as st

from lawrence.arrangement import Arrangement
from lawrence.errors import NotGenerating, ZeroVector
from lawrence.matroid import validate_config

WORKED_VECTORS = [[1, 0], [0, 1], [-2, 0], [2, -1]]
WORKED_OFFSETS = [0, 0, 2, -1]


@pytest.fixture
def worked():
    return validate_config(2, WORKED_VECTORS)


@pytest.fixture
def worked_arr(worked):
    return Arrangement(worked, tuple(Fraction(r) for r in WORKED_OFFSETS))


@st.composite
def configs(draw, dmax=2, nmax=4, bound=2):
    """Small generating configurations, filtered by validation."""
    d = draw(st.integers(1, dmax))
    n = draw(st.integers(d, nmax))
    vecs = draw(st.lists(st.lists(st.integers(-bound, bound), min_size=d, max_size=d),
                         min_size=n, max_size=n))
    try:
        return validate_config(d, vecs)
    except (ZeroVector, NotGenerating):
        assume(False)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
