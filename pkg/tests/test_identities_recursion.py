"""Tests for the adjacent-swap recursions and the recursive evaluators."""

from itertools import product

import pytest
from hypothesis import given, settings

from weightedcomplex.identities.recursion import S_recursive, T_recursive, verify_recursion
from weightedcomplex.identities.sums import S_direct, T_direct
from weightedcomplex.weighted.weights import WeightVector

from tests.strategies import weight_vectors


def test_recursion_example(make_weights) -> None:
    """S(3,-1) + S(-1,3) = 2 · S(())."""
    check = verify_recursion(make_weights(3, -1), 1)
    assert check.s_identity.lhs == 2
    assert check.s_identity.rhs == 2
    assert check.passed


def test_recursion_without_indicator(make_weights) -> None:
    check = verify_recursion(make_weights(1, -1, 2), 1)
    assert check.s_identity.rhs == 0
    assert check.t_identity.rhs == 0
    assert check.passed


@pytest.mark.parametrize("i", [0, 3])
def test_recursion_index_range(make_weights, i) -> None:
    with pytest.raises(ValueError):
        verify_recursion(make_weights(1, 2, 3), i)


@pytest.mark.parametrize("n", range(2, 6))
def test_recursion_holds_on_grid(n) -> None:
    for values in product((-2, -1, 1, 2), repeat=n):
        weights = WeightVector.of(*values)
        assert all(verify_recursion(weights, i).passed for i in range(1, n)), weights


@settings(max_examples=200, deadline=None)
@given(weights=weight_vectors(min_n=2, max_n=6))
def test_recursion_holds_on_random_weights(weights) -> None:
    for i in range(1, weights.n):
        assert verify_recursion(weights, i).passed, i


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(weights=weight_vectors(min_n=2, max_n=7))
def test_recursion_holds_on_a_thousand_weights(weights) -> None:
    assert all(verify_recursion(weights, i).passed for i in range(1, weights.n))


@pytest.mark.parametrize("n", range(0, 6))
def test_recursive_evaluators_match_direct_sums(n) -> None:
    for values in product((-2, -1, 1, 2), repeat=n):
        weights = WeightVector.of(*values)
        assert S_recursive(weights) == S_direct(weights)
        assert T_recursive(weights) == T_direct(weights)


def test_recursive_evaluators_on_fractions(make_weights) -> None:
    weights = make_weights("1/2", "-1/3", "5/6", "-2/3", "1/6")
    assert S_recursive(weights) == S_direct(weights)
    assert T_recursive(weights) == T_direct(weights)


@settings(max_examples=100, deadline=None)
@given(weights=weight_vectors(min_n=1, max_n=7))
def test_recursive_evaluators_match_direct_sums_on_random_weights(weights) -> None:
    assert S_recursive(weights) == S_direct(weights)
    assert T_recursive(weights) == T_direct(weights)


@pytest.mark.slow
def test_recursive_evaluator_on_long_decreasing_weights() -> None:
    """λ = (16, ..., 1): both routes agree with S = (-1)^n T at the ground-set limit."""
    weights = WeightVector.of(*range(16, 0, -1))
    assert S_recursive(weights) == T_recursive(weights)
