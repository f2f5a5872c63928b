import random

import pytest

from gaussquares.exact import GaussInt


@pytest.fixture
def rng():
    return random.Random(20250810)


def random_gauss(rng, span=50, nonzero=False) -> GaussInt:
    while True:
        z = GaussInt(rng.randint(-span, span), rng.randint(-span, span))
        if not (nonzero and z.is_zero()):
            return z
