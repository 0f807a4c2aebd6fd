import numpy as np
import pytest

from photonlimits import Grid, VacuumModeWeights


@pytest.fixture
def grid():
    """Medium-resolution centered grid used across the suites."""
    return Grid.centered(2**14, 0.02)


@pytest.fixture
def coarse_grid():
    return Grid.centered(2**12, 0.05)


@pytest.fixture
def weights():
    return VacuumModeWeights()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
