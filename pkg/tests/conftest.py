import random

import pytest

from skewdna.gf import build_field
from skewdna.ring import build_ring

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf16():
    return build_field(1)


@pytest.fixture(scope="session")
def gf256():
    return build_field(2)


@pytest.fixture(scope="session")
def r11(gf16):
    return build_ring(gf16, 1)


@pytest.fixture(scope="session")
def r13(gf16):
    return build_ring(gf16, 3)


@pytest.fixture
def rng():
    return random.Random(20171108)


def random_element(ring, rng):
    return ring.element([rng.randrange(ring.field.order) for _ in range(ring.size)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
