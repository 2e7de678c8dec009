import math

import pytest
from hypothesis import strategies as st

from qwsearch import make_instance

ACCEPTANCE_LINES: list[str] = []


@st.composite
def instances(draw, max_size=1024, init=None):
    n1 = draw(st.integers(2, max_size))
    n2 = draw(st.integers(1, max_size))
    k = draw(st.integers(1, n1 - 1))
    init = init or draw(st.sampled_from(["s", "sigma"]))
    return make_instance(n1, n2, k, init)


@st.composite
def small_instances(draw, max_arcs=2**14):
    n1 = draw(st.integers(2, 64))
    n2 = draw(st.integers(1, max(1, min(64, max_arcs // (2 * n1)))))
    k = draw(st.integers(1, n1 - 1))
    init = draw(st.sampled_from(["s", "sigma"]))
    return make_instance(n1, n2, k, init)


@pytest.fixture
def k44():
    return make_instance(4, 4, 1, "s")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)
