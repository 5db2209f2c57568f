import math

import numpy as np
import pytest

from helpers import computational_vector


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def w_state():
    s = 1 / math.sqrt(3)
    return computational_vector({"001": s, "010": s, "100": s})


@pytest.fixture
def ghz_state():
    s = 1 / math.sqrt(2)
    return computational_vector({"000": s, "111": s})


@pytest.fixture
def product_state():
    return computational_vector({"000": 1.0})
