"""Tests for maximal matchings, crossings and the pair-sorted permutations."""

import pytest

from weightedcomplex.config import settings
from weightedcomplex.core.matchings import (
    Matching,
    crossings,
    enumerate_maximal_matchings,
    is_sstar,
    matching_lift,
    matching_sign,
    matching_to_sstar,
    maximal_matching_count,
    sstar_to_matching,
)
from weightedcomplex.core.permutations import Permutation, all_permutations, sign
from weightedcomplex.errors import CapExceededError


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 3), (5, 15), (6, 15), (7, 105)])
def test_enumeration_count(n, count) -> None:
    matchings = list(enumerate_maximal_matchings(n))
    assert maximal_matching_count(n) == count
    assert len(matchings) == count
    assert len(set(matchings)) == count


def test_enumeration_respects_cap(monkeypatch) -> None:
    monkeypatch.setattr(settings, "matching_cap", 4)
    with pytest.raises(CapExceededError):
        list(enumerate_maximal_matchings(5))


@pytest.mark.parametrize(
    "edges,n,isolated",
    [
        (((1, 2),), 4, None),
        (((1, 2), (2, 3)), 4, None),
        (((2, 1), (3, 4)), 4, None),
        (((1, 2),), 3, None),
        (((1, 2),), 3, 2),
    ],
)
def test_invalid_matchings_are_rejected(edges, n, isolated) -> None:
    with pytest.raises(ValueError):
        Matching(edges, n, isolated)


def test_from_pairs_normalizes_and_finds_isolated_vertex() -> None:
    p = Matching.from_pairs([(3, 1)], 3)
    assert p.edges == ((1, 3),)
    assert p.isolated == 2
    assert str(p) == "{1,3} | 2"


@pytest.mark.parametrize(
    "pairs,n,cross,expected_sign",
    [
        ([(1, 2), (3, 4)], 4, 0, 1),
        ([(1, 3), (2, 4)], 4, 1, -1),
        ([(1, 4), (2, 3)], 4, 0, 1),
        ([(1, 2)], 3, 0, 1),
        ([(1, 3)], 3, 0, -1),
        ([(2, 3)], 3, 0, 1),
    ],
)
def test_crossings_and_sign(pairs, n, cross, expected_sign) -> None:
    p = Matching.from_pairs(pairs, n)
    assert crossings(p) == cross
    assert matching_sign(p) == expected_sign


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_lift_is_a_sign_preserving_bijection(n) -> None:
    """Odd-n matchings lift onto the (n+1)-matchings pairing n+1, with the same sign."""
    lifted = {}
    for p in enumerate_maximal_matchings(n):
        q = matching_lift(p)
        assert matching_sign(q) == matching_sign(p)
        lifted[q] = p
    targets = {q for q in enumerate_maximal_matchings(n + 1) if any(n + 1 in e for e in q.edges)}
    assert set(lifted) == targets


def test_lift_rejects_even_n() -> None:
    with pytest.raises(ValueError):
        matching_lift(Matching.from_pairs([(1, 2)], 2))


@pytest.mark.parametrize(
    "n",
    [*range(1, 8), pytest.param(8, marks=pytest.mark.slow), pytest.param(9, marks=pytest.mark.slow)],
)
def test_sstar_is_a_sign_preserving_bijection(n) -> None:
    """Pair-sorted permutations correspond to maximal matchings, signs included."""
    sstar = [tau for tau in all_permutations(n) if is_sstar(tau)]
    images = [sstar_to_matching(tau) for tau in sstar]
    assert len(sstar) == maximal_matching_count(n)
    assert set(images) == set(enumerate_maximal_matchings(n))
    for tau, p in zip(sstar, images):
        assert sign(tau) == matching_sign(p)
        assert matching_to_sstar(p) == tau


def test_sstar_to_matching_rejects_unsorted_pairs() -> None:
    with pytest.raises(ValueError):
        sstar_to_matching(Permutation.parse("2134"))
