import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from bncells.group import SignedPerm

settings.register_profile(
    "default",
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.register_profile(
    "fast",
    derandomize=True,
    max_examples=10,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def signed_perms(draw, min_rank: int = 1, max_rank: int = 6) -> SignedPerm:
    n = draw(st.integers(min_value=min_rank, max_value=max_rank))
    values = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return SignedPerm(tuple(-v if s else v for v, s in zip(values, signs)))


def signed_perms_of_rank(n: int):
    return signed_perms(min_rank=n, max_rank=n)


@pytest.fixture(scope="session")
def rng_seeded():
    import random

    return random.Random(20260818)
