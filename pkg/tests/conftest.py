from fractions import Fraction

import pytest

from hvlab.algebra import AlgebraConfig
from hvlab.gamma import GroupSpec


@pytest.fixture
def cfg():
    """Full variant over the integers with the default mixed cocycle."""
    return AlgebraConfig(GroupSpec((Fraction(1),)))


@pytest.fixture
def cfg_centerless(cfg):
    return cfg.centerless_version()


@pytest.fixture
def cfg_half():
    """Full variant over the half-integers."""
    return AlgebraConfig(GroupSpec((Fraction(1, 2),)))
