import numpy as np
import pytest
from hypothesis import settings

from salie_lab import ShiftParams, make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL_PRIMES = [p for p in range(3, 500) if all(p % d for d in range(2, int(p**0.5) + 1))]


@pytest.fixture
def q101():
    return make_field(101)


@pytest.fixture
def shift101(q101):
    return ShiftParams.create(q101, 3, 5, 7)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
