import math

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240610)


@pytest.fixture
def random_angles(rng):
    """Draws (theta_c, theta_b, theta_m) triples uniformly from [0, pi/2)."""

    def draw(count):
        return [
            tuple(float(a) for a in rng.uniform(0.0, math.pi / 2, size=3)) for _ in range(count)
        ]

    return draw
