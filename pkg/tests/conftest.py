import random

import pytest
from hypothesis import strategies as st

from cfroots.poly import IntPoly


def int_polys(max_degree=12, bound=50, min_degree=0):
    return st.lists(st.integers(-bound, bound), min_size=min_degree + 1, max_size=max_degree + 1) \
        .map(IntPoly).filter(lambda p: not p.is_zero() and p.degree >= min_degree)


@pytest.fixture
def rng():
    return random.Random(20061)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
