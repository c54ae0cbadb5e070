"""Shared fixtures: the worked-example functions and data locations."""

from pathlib import Path

import pytest

import fcclib
from fcclib import linear_function, table_function

TESTS = Path(__file__).parent
DATA = TESTS / "data"
GOLDEN = TESTS / "golden"
SHIPPED = Path(fcclib.__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN


@pytest.fixture(scope="session")
def shipped_dir():
    return SHIPPED


@pytest.fixture
def ex_q2_k4():
    """Binary k=4 function with two output bits; the running 16-message example."""
    return linear_function(2, [(1, 1, 1, 0), (0, 1, 1, 0)])


@pytest.fixture
def ex_q2_k3():
    """Binary k=3 function behind the 16x16 adjacency and spectral goldens."""
    return linear_function(2, [(0, 1, 1), (1, 1, 0)])


@pytest.fixture
def ex_q3_k2():
    """Ternary digit-sum function behind the 9x9 adjacency golden."""
    return linear_function(3, [(1, 1)])


@pytest.fixture
def ex_q3_k3():
    """Ternary k=3 function with two output digits; the coset-coding example."""
    return linear_function(3, [(2, 2, 0), (1, 1, 1)])


@pytest.fixture
def or_q2_k2():
    """The 2-input OR, as a value table."""
    return table_function(2, 2, [0, 1, 1, 1])


@pytest.fixture
def or_q2_k3():
    """The 3-input OR, as a value table."""
    return table_function(2, 3, [0] + [1] * 7)


@pytest.fixture
def const_q2_k3():
    """A constant function (empty matrix)."""
    return linear_function(2, [], k=3)
