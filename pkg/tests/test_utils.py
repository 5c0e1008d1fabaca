"""Tests for batching and the seeded weight populations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from weightedcomplex.utils import (
    batch_generator,
    grid_weights,
    make_rng,
    random_distinct_weights,
    random_nonpositive_first,
    random_positive_weights,
    random_weakly_decreasing,
    random_weakly_increasing,
    random_weights,
)


def test_batch_generator_splits_evenly_and_keeps_remainder() -> None:
    batches = list(batch_generator(list(range(7)), 3))
    assert batches == [[0, 1, 2], [3, 4, 5], [6]]


def test_batch_generator_empty() -> None:
    assert list(batch_generator([], 4)) == []


def test_batch_generator_rejects_non_positive_size() -> None:
    with pytest.raises(ValueError):
        list(batch_generator([1, 2], 0))


def test_grid_weights_enumerates_lexicographically() -> None:
    grid = [str(w) for w in grid_weights(2, [Fraction(-1), Fraction(1, 2)])]
    assert grid == ["(-1,-1)", "(-1,1/2)", "(1/2,-1)", "(1/2,1/2)"]


def test_same_seed_same_population() -> None:
    first_rng, second_rng = make_rng(7), make_rng(7)
    first = [random_weights(4, first_rng) for _ in range(5)]
    second = [random_weights(4, second_rng) for _ in range(5)]
    assert first == second


@hypothesis_settings(max_examples=40)
@given(seed=st.integers(min_value=0, max_value=2**32), n=st.integers(min_value=1, max_value=6))
def test_generators_honour_their_shape(seed: int, n: int) -> None:
    rng = make_rng(seed)

    assert random_weights(n, rng, require_positive_total=True).total > 0
    assert all(w > 0 for w in random_positive_weights(n, rng).weights)
    assert random_nonpositive_first(n, rng)[1] <= 0
    assert random_weakly_increasing(n, rng).is_weakly_increasing()
    assert random_weakly_decreasing(n, rng).is_weakly_decreasing()

    distinct = random_distinct_weights(n, rng)
    assert distinct.has_distinct_entries()
    assert distinct.total > 0


@hypothesis_settings(max_examples=40)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_entries_stay_in_range(seed: int) -> None:
    weights = random_weights(5, make_rng(seed))
    for w in weights.weights:
        assert 1 <= w.denominator <= 6
        assert -9 <= w <= 9
