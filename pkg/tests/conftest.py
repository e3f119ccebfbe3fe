import random

import pytest

from spinweil.spingeo import Spinor
from spinweil.weil import Period

SEED = 987123


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture
def standard_h():
    return Spinor([0, 1, 0, 0, 0, 1, 0, 0])


@pytest.fixture
def standard_s():
    return Spinor([1, 0, 0, 0, 1, 0, 0, 0])


@pytest.fixture
def standard_period():
    return Period((0, 0, 1, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 0, 1))
