import math

import numpy as np
import pytest

from logpot import families
from logpot.potential_core import DISC, HALF_PLANE, ChargeConfiguration


@pytest.fixture(scope="session")
def single():
    return ChargeConfiguration.from_arrays([1.0], [0.0])


@pytest.fixture(scope="session")
def pair():
    return ChargeConfiguration.from_arrays([1.0, 1.0], [-0.5, 0.5])


@pytest.fixture(scope="session")
def geo3():
    return ChargeConfiguration.from_family(families.geometric(0.5, 3))


@pytest.fixture(scope="session")
def geo5():
    return ChargeConfiguration.from_family(families.geometric(0.5, 5))


@pytest.fixture(scope="session")
def geo40():
    return ChargeConfiguration.from_family(families.geometric(0.5, 40))


@pytest.fixture(scope="session")
def ce_half():
    return ChargeConfiguration.from_family(families.counterexample(10_000), HALF_PLANE)


@pytest.fixture(scope="session")
def ce_disc():
    return ChargeConfiguration.from_family(families.counterexample(10_000), DISC)


@pytest.fixture(scope="session")
def power_steep():
    return ChargeConfiguration.from_family(families.power_law(0.5, 1000, math.pi / 3))


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
