import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_positive_values(gen, n=None, lo=0.05, hi=20.0, n_min=2, n_max=20):
    if n is None:
        n = int(gen.integers(n_min, n_max + 1))
    return gen.uniform(lo, hi, n)
