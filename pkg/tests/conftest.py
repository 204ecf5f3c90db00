"""
Shared fixtures: catalog objects are expensive, so they are built once per session
"""

import numpy as np
import pytest

from src.catalog import (
    e8_a8_plus_three, e8_tetracode, h_on_e8, leech, leech_with_h, m_mprime_tower, q_group, q_std,
    r_group, r_std, root_lattice,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def a2():
    return root_lattice("A", 2)


@pytest.fixture(scope="session")
def e8():
    return root_lattice("E", 8)


@pytest.fixture(scope="session")
def tetracode_e8():
    return e8_tetracode()


@pytest.fixture(scope="session")
def a8_e8():
    return e8_a8_plus_three()


@pytest.fixture(scope="session")
def h_e8():
    return h_on_e8()


@pytest.fixture(scope="session")
def q():
    return q_std()


@pytest.fixture(scope="session")
def r():
    return r_std()


@pytest.fixture(scope="session")
def dq():
    return q_group()


@pytest.fixture(scope="session")
def dr():
    return r_group()


@pytest.fixture(scope="session")
def tower():
    return m_mprime_tower()


@pytest.fixture(scope="session")
def leech_lattice():
    return leech()


@pytest.fixture(scope="session")
def leech_h():
    return leech_with_h(0)
