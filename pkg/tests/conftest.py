import numpy as np
import pytest
from hypothesis import settings

from momentmap.poly import NormalizedPoly

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def golden_n2():
    return NormalizedPoly([1.0, 0.3])


@pytest.fixture
def golden_n3():
    return NormalizedPoly([1.0, 0.0, 0.2])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
