"""Seeded weight-vector populations for sweeps and property tests. 🎲

Every generator draws from a numpy Generator, so a seed fixes the whole
population. Random entries are fractions p/q with p in [-9, 9] and q in 1..6.
"""

from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from weightedcomplex.weighted.weights import WeightVector

NUMERATOR_BOUND = 9
DENOMINATOR_BOUND = 6


def make_rng(seed: int | Sequence[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def _draw(rng: np.random.Generator, low: int = -NUMERATOR_BOUND) -> Fraction:
    numerator = int(rng.integers(low, NUMERATOR_BOUND + 1))
    denominator = int(rng.integers(1, DENOMINATOR_BOUND + 1))
    return Fraction(numerator, denominator)


def random_weights(
    n: int, rng: np.random.Generator, require_positive_total: bool = False
) -> WeightVector:
    """Random rational λ; redrawn until Σλ_i > 0 when requested."""
    while True:
        weights = WeightVector(tuple(_draw(rng) for _ in range(n)))
        if not require_positive_total or weights.total > 0:
            return weights


def random_positive_weights(n: int, rng: np.random.Generator) -> WeightVector:
    return WeightVector(tuple(_draw(rng, low=1) for _ in range(n)))


def random_nonpositive_first(n: int, rng: np.random.Generator) -> WeightVector:
    """Random λ with λ1 <= 0."""
    first = -abs(_draw(rng))
    return WeightVector((first, *(_draw(rng) for _ in range(n - 1))))


def random_weakly_increasing(n: int, rng: np.random.Generator) -> WeightVector:
    return WeightVector(tuple(sorted(_draw(rng) for _ in range(n))))


def random_weakly_decreasing(
    n: int, rng: np.random.Generator, require_positive_total: bool = False
) -> WeightVector:
    weights = random_weights(n, rng, require_positive_total)
    return WeightVector(tuple(sorted(weights.weights, reverse=True)))


def random_distinct_weights(n: int, rng: np.random.Generator) -> WeightVector:
    """Pairwise distinct entries with Σλ_i > 0."""
    while True:
        weights = random_weights(n, rng, require_positive_total=True)
        if weights.has_distinct_entries():
            return weights


def grid_weights(n: int, values: Sequence[Fraction | int]) -> Iterator[WeightVector]:
    """Every λ in values^n, in lexicographic order of positions."""
    for combo in product(values, repeat=n):
        yield WeightVector(tuple(Fraction(v) for v in combo))
