import random

import pytest

from freelie.lie import FreeLieAlgebra
from freelie.scalars import GF, QQ

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def L3():
    return FreeLieAlgebra(3, QQ)


@pytest.fixture(scope="session")
def L3p():
    return FreeLieAlgebra(3, GF(5))


@pytest.fixture(params=["QQ", "GF5"], scope="session")
def L(request):
    return FreeLieAlgebra(3, QQ if request.param == "QQ" else GF(5))


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
