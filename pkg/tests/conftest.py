import random

import pytest

from ccma.instance import default_instance

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def inst():
    return default_instance()


@pytest.fixture(scope="session")
def oracle(inst):
    return inst.oracle


@pytest.fixture
def rng():
    return random.Random(20261015)


def random_elem(rng, n=13, nonzero=False):
    while True:
        x = tuple(rng.randrange(16) for _ in range(n))
        if any(x) or not nonzero:
            return x


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
