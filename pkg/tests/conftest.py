import random

import pytest
from hypothesis import settings

from platforge.braids import BraidWord

settings.register_profile("repro", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("repro")

SEED = 20240611


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


@pytest.fixture
def rng():
    return random.Random(SEED)
