from pathlib import Path

import pytest

from lefcat.category import build_category
from lefcat.formats import parse_category, parse_functor

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def load(cat_name, fun_name=None):
    cat = parse_category((FIXTURES / cat_name).read_text())
    if fun_name is None:
        return cat
    return cat, parse_functor((FIXTURES / fun_name).read_text(), cat)


@pytest.fixture
def parallel_pair():
    return load("C.cat")


@pytest.fixture
def swap_functor():
    return load("C.cat", "swapC.fun")[1]


@pytest.fixture
def d_category():
    return load("D.cat")


@pytest.fixture
def layered_functor():
    return load("layered.cat", "layered.fun")[1]


@pytest.fixture
def chain3():
    """The poset 0 < 1 < 2: a: 0->1, b: 1->2, ba: 0->2."""
    return build_category(3, [(0, 1), (1, 2), (0, 2)], {(1, 0): 2})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
