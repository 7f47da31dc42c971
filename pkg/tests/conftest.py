import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from hstar.atlas import spaces_upto  # noqa: E402
from hstar.report import fixture_spaces  # noqa: E402
from hstar.space import discrete, indiscrete, sierpinski  # noqa: E402

P, Q, R, S, T = 1, 2, 4, 8, 16


@pytest.fixture(scope="session")
def E1():
    return fixture_spaces()["E1"]


@pytest.fixture(scope="session")
def E2():
    return fixture_spaces()["E2"]


@pytest.fixture(scope="session")
def E3():
    return fixture_spaces()["E3"]


@pytest.fixture
def sier():
    return sierpinski()


@pytest.fixture(scope="session")
def upto4():
    return list(spaces_upto(4))


@pytest.fixture(scope="session")
def upto3():
    return list(spaces_upto(3))


__all__ = ["discrete", "indiscrete", "sierpinski"]
