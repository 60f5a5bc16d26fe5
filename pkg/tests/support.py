"""Shared helpers for the test suite."""

import random

from cfded import QuadSurd, surd_normalize
from cfded.exactnum import squarefree_split


def random_surd(rng: random.Random, max_n: int = 300) -> QuadSurd:
    """A random canonical quadratic surd with squarefree radicand <= max_n."""
    while True:
        n = rng.randrange(2, max_n + 1)
        g, k = squarefree_split(n)
        if k == 1:
            continue
        a = rng.randrange(-20, 21)
        b = rng.choice([-3, -2, -1, 1, 2, 3])
        c = rng.randrange(1, 16)
        return surd_normalize(a, b, c, n)


def phi() -> QuadSurd:
    return surd_normalize(1, 1, 2, 5)


def inv_sqrt(n: int) -> QuadSurd:
    return surd_normalize(0, 1, n, n)
