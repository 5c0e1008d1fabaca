"""Tests for exact Pfaffians and the Pfaffian form of T(λ)."""

from itertools import product

import pytest

from weightedcomplex.config import settings
from weightedcomplex.errors import CapExceededError
from weightedcomplex.identities.pfaffian import (
    SkewMatrix,
    T_via_pfaffian,
    matching_matrix,
    pfaffian,
    pfaffian_squared_equals_det,
    random_skew_matrix,
)
from weightedcomplex.identities.sums import T_direct
from weightedcomplex.utils import make_rng, random_weights
from weightedcomplex.weighted.weights import WeightVector


def test_small_pfaffians() -> None:
    assert pfaffian(SkewMatrix(0, ())) == 1
    assert pfaffian(SkewMatrix.from_function(2, lambda i, j: 7)) == 7
    assert pfaffian(SkewMatrix.from_function(4, lambda i, j: 1)) == 1


def test_pfaffian_of_order_four_expansion() -> None:
    """Pf = a12 a34 - a13 a24 + a14 a23."""
    entries = {(1, 2): 2, (1, 3): 3, (1, 4): 5, (2, 3): 7, (2, 4): 11, (3, 4): 13}
    matrix = SkewMatrix.from_function(4, lambda i, j: entries[(i, j)])
    assert pfaffian(matrix) == 2 * 13 - 3 * 11 + 5 * 7


def test_odd_order_is_rejected() -> None:
    with pytest.raises(ValueError):
        pfaffian(SkewMatrix.from_function(3, lambda i, j: 1))


def test_pfaffian_respects_cap(monkeypatch) -> None:
    monkeypatch.setattr(settings, "pfaffian_max_order", 4)
    with pytest.raises(CapExceededError):
        pfaffian(SkewMatrix.from_function(6, lambda i, j: 1))


@pytest.mark.parametrize("order", [2, 4, 6, 8])
def test_square_equals_determinant(order) -> None:
    rng = make_rng(order)
    for _ in range(5):
        assert pfaffian_squared_equals_det(random_skew_matrix(order, rng))


def test_dense_round_trip_and_skew_check() -> None:
    rows = [[0, 1, -2], [-1, 0, 3], [2, -3, 0]]
    assert SkewMatrix.from_dense(rows).dense() == rows
    with pytest.raises(ValueError):
        SkewMatrix.from_dense([[0, 1], [1, 0]])


def test_matching_matrix_adds_column_for_odd_n(make_weights) -> None:
    matrix = matching_matrix(make_weights(5, 1, -2))
    assert matrix.order == 4
    assert [matrix(i, 4) for i in (1, 2, 3)] == [1, 1, 0]
    assert matrix(1, 3) == 2
    assert matrix(3, 1) == -2


@pytest.mark.parametrize("n", range(1, 6))
def test_pfaffian_matches_matching_sum_on_grid(n) -> None:
    for values in product((-2, -1, 1, 2), repeat=n):
        weights = WeightVector.of(*values)
        assert T_via_pfaffian(weights) == T_direct(weights)


@pytest.mark.parametrize("n", [7, 8])
def test_pfaffian_matches_matching_sum_on_random_weights(n) -> None:
    rng = make_rng(n)
    for _ in range(50):
        weights = random_weights(n, rng)
        assert T_via_pfaffian(weights) == T_direct(weights)


def test_empty_sequence() -> None:
    assert T_via_pfaffian(WeightVector(())) == 1
