import random
from fractions import Fraction

import pytest

from sumprod import Elliptic, SubgroupBasis, box

# y^2 = x^3 + 17 has rank 2 with independent points (-2, 3), (-1, 4)
CURVE17 = Elliptic(0, 17)
GENS17 = ((-2, 3), (-1, 4))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def curve17():
    return CURVE17


@pytest.fixture(scope="session")
def point_pool():
    return list(box(SubgroupBasis(CURVE17, GENS17), 3))


@pytest.fixture
def rng():
    return random.Random(20261016)


def random_fraction(rng, num=20, den=9, nonzero=False):
    while True:
        q = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if q or not nonzero:
            return q


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
