import numpy as np
import pytest

from circleorth import measure as M
from circleorth.bridge import build_context


@pytest.fixture(scope="session")
def suite():
    return M.acceptance_suite()


@pytest.fixture(scope="session")
def contexts(suite):
    return [(m, build_context(m, 6)) for m in suite]


@pytest.fixture(scope="session")
def bs05():
    return M.bernstein_szego([0.5])


@pytest.fixture(scope="session")
def geometric():
    return M.geometric(0.5)


def cfourier():
    """1 + 0.4 cos(theta) + 0.3 sin(2 theta): a weight with beta_n != 0."""
    return M.fourier([1.0, 0.2, -0.15j], name="fourier-asym")


@pytest.fixture(scope="session")
def asym():
    return cfourier()


def rng(seed=0):
    return np.random.default_rng(seed)
