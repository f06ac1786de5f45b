import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tleib.families import TLeib5Params, TLeib6Params
from tleib.scalar import Scalar
from tleib.transform import random_gaussian_rational

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


fractions = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 30))
gaussians = st.builds(Scalar, fractions, fractions)
nonzero_gaussians = gaussians.filter(bool)
sparse_gaussians = st.one_of(st.just(Scalar(0)), gaussians)

tleib5_params = st.builds(TLeib5Params, *[sparse_gaussians] * 4)
tleib6_params = st.builds(TLeib6Params, *[sparse_gaussians] * 6)
tleib_params = st.one_of(tleib5_params, tleib6_params)


def zero_inflated(rng: random.Random, dim: int):
    """Each coordinate is zero with probability 1/2."""
    cls = TLeib5Params if dim == 5 else TLeib6Params
    n = 4 if dim == 5 else 6
    return cls(*(random_gaussian_rational(rng) if rng.random() < 0.5 else Scalar(0) for _ in range(n)))


def random_nonzero(rng: random.Random) -> Scalar:
    while True:
        s = random_gaussian_rational(rng)
        if s:
            return s


@pytest.fixture
def rng():
    return random.Random(20240611)
