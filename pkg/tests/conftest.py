import sys

import numpy as np
import pytest

from qhopf.catalog import make_alpha, make_u_abelian, make_u_dual


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def ka3():
    return make_alpha(3, 1)


@pytest.fixture(scope="session")
def ka5():
    return make_alpha(5, 1)


@pytest.fixture(scope="session")
def ug3():
    # k[x,y]/(x^3, y^3) with x, y primitive
    return make_u_abelian(3, 2)


@pytest.fixture(scope="session")
def ud3():
    return make_u_dual(3, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
