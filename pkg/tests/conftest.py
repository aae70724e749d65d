import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


def random_rational(rng: random.Random, num_bound: int = 40, den_bound: int = 30) -> Fraction:
    den = rng.randint(1, den_bound)
    return Fraction(rng.randint(-num_bound, num_bound), den)


def random_padic_rational(rng: random.Random, p: int, num_bound: int = 60) -> Fraction:
    """A random rational with denominator coprime to p."""
    while True:
        den = rng.randint(1, num_bound)
        if den % p:
            return Fraction(rng.randint(-num_bound, num_bound), den)
