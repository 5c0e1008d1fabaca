"""Tests for permutations, compositions and the weak Bruhat order."""

from math import factorial

import numpy as np
import pytest

from weightedcomplex.core.compositions import Composition, composition_covers, compositions
from weightedcomplex.core.permutations import (
    Permutation,
    all_permutations,
    bruhat_rank_order,
    descent_composition,
    descent_set,
    inversions,
    is_weak_bruhat_linear_extension,
    lower_weak_bruhat_covers,
    random_linear_extension,
    sign,
    weak_bruhat_covers,
)


def test_permutation_rejects_non_bijection() -> None:
    """Repeated entries are not a permutation."""
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))


@pytest.mark.parametrize(
    "text,expected",
    [("2143", (2, 1, 4, 3)), ("2,1,4,3", (2, 1, 4, 3)), ("3 1 2", (3, 1, 2))],
)
def test_parse_accepts_compact_and_separated_forms(text, expected) -> None:
    assert Permutation.parse(text).entries == expected


def test_inverse_and_compose_are_consistent() -> None:
    """tau o tau^-1 is the identity for every tau in S_4."""
    for tau in all_permutations(4):
        assert tau.compose(tau.inverse()) == Permutation.identity(4)
        assert tau.inverse().compose(tau) == Permutation.identity(4)


def test_apply_is_a_left_action() -> None:
    """(sigma o tau)(x) == sigma(tau(x))."""
    x = ("a", "b", "c", "d")
    sigma = Permutation.parse("2413")
    tau = Permutation.parse("3142")
    assert sigma.compose(tau).apply(x) == sigma.apply(tau.apply(x))


@pytest.mark.parametrize(
    "text,inv,descents",
    [("1234", 0, ()), ("2143", 2, (1, 3)), ("4321", 6, (1, 2, 3)), ("312", 2, (1,))],
)
def test_inversions_and_descents(text, inv, descents) -> None:
    tau = Permutation.parse(text)
    assert inversions(tau) == inv
    assert sign(tau) == (-1) ** inv
    assert descent_set(tau) == descents


def test_descent_composition_lists_ascending_runs() -> None:
    assert descent_composition(Permutation.parse("1324")).parts == (2, 2)
    assert descent_composition(Permutation.parse("4321")).parts == (1, 1, 1, 1)


def test_weak_bruhat_covers_of_identity() -> None:
    assert weak_bruhat_covers(Permutation.identity(3)) == {
        Permutation.parse("213"),
        Permutation.parse("132"),
    }
    assert lower_weak_bruhat_covers(Permutation.identity(3)) == set()
    assert weak_bruhat_covers(Permutation.longest(3)) == set()


def test_rank_order_is_linear_extension() -> None:
    """Sorting by inversion count respects every cover."""
    assert is_weak_bruhat_linear_extension(bruhat_rank_order(all_permutations(4)))


def test_linear_extension_check_detects_reversed_order() -> None:
    order = list(reversed(bruhat_rank_order(all_permutations(3))))
    assert is_weak_bruhat_linear_extension(order) is False


def test_linear_extension_check_rejects_short_order() -> None:
    with pytest.raises(ValueError):
        is_weak_bruhat_linear_extension([Permutation.identity(3)])


@pytest.mark.parametrize("seed", range(5))
def test_random_linear_extension_respects_covers(seed) -> None:
    """Sampled extensions of all of S_4 are valid linear extensions."""
    order = random_linear_extension(all_permutations(4), np.random.default_rng(seed))
    assert len(order) == factorial(4)
    assert is_weak_bruhat_linear_extension(order)


def test_random_linear_extension_requires_lower_ideal(rng) -> None:
    with pytest.raises(ValueError):
        random_linear_extension({Permutation.parse("213")}, rng)


def test_compositions_enumerate_all_cut_sets() -> None:
    assert [str(c) for c in compositions(3)] == ["(3)", "(2,1)", "(1,2)", "(1,1,1)"]
    assert sum(1 for _ in compositions(6)) == 2**5


def test_composition_covers_add_adjacent_parts() -> None:
    assert composition_covers(Composition((1, 2, 1))) == {
        Composition((3, 1)),
        Composition((1, 3)),
    }
    assert composition_covers(Composition((4,))) == set()


def test_composition_rejects_zero_parts() -> None:
    with pytest.raises(ValueError):
        Composition((2, 0, 1))
