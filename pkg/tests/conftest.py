import random

import pytest

from expansive.sequences import Alphabet, PatchedPeriodicSequence


def random_sequence(rng: random.Random, size=3, max_tail=3, max_patch=4,
                    max_offset=5) -> PatchedPeriodicSequence:
    alphabet = Alphabet(size)
    left = tuple(rng.randint(1, size) for _ in range(rng.randint(1, max_tail)))
    right = tuple(rng.randint(1, size) for _ in range(rng.randint(1, max_tail)))
    patch = tuple(rng.randint(1, size) for _ in range(rng.randint(0, max_patch)))
    offset = rng.randint(-max_offset, max_offset)
    return PatchedPeriodicSequence(alphabet, left, patch, offset, right)


@pytest.fixture
def rng():
    return random.Random(20240811)
