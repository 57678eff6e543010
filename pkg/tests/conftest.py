import numpy as np
import pytest

from blaschke import maps, structure

FIG1_A = 0.5j
FIG1_LAM_A = -1.9e-6 + 3.15e-5j


@pytest.fixture(scope="session")
def p_real():
    return maps.MapParams.perturbed(0.5, 1e-6)


@pytest.fixture(scope="session")
def p_fig1a():
    return maps.MapParams.perturbed(FIG1_A, FIG1_LAM_A)


@pytest.fixture(scope="session")
def regions_real(p_real):
    return structure.locate_regions(p_real)


@pytest.fixture(scope="session")
def regions_fig1a(p_fig1a):
    return structure.locate_regions(p_fig1a)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240305)
