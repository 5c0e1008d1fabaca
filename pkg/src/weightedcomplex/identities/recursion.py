"""Adjacent-swap recursions for S and T, and the evaluators built on them. 🔁

For 1 <= i < n and μ = λ with entries i, i+1 removed:

    S(λ) + S(s_i λ) = 2 · [λ_i + λ_{i+1} > 0] · S(μ)
    T(λ) + T(s_i λ) = 2 · [λ_i + λ_{i+1} > 0] · T(μ)

with S(()) = T(()) = 1. Bubble-sorting λ with these identities reduces any
λ to weakly increasing sequences, where the closed forms apply.
"""

from fractions import Fraction
from typing import Callable

from weightedcomplex.identities.base_case import S_closed_increasing, T_closed_increasing
from weightedcomplex.identities.models import IdentityCheck, RecursionCheck
from weightedcomplex.identities.sums import S_direct, T_direct
from weightedcomplex.weighted.weights import WeightVector


def _swap_indicator(weights: WeightVector, i: int) -> int:
    return 1 if weights[i] + weights[i + 1] > 0 else 0


def verify_recursion(weights: WeightVector, i: int) -> RecursionCheck:
    """Evaluate both recursions at s_i with direct sums on every side.

    Raises:
        ValueError: If i is not in 1..n-1.
        CapExceededError: If the direct sums exceed their caps.
    """
    if not 1 <= i < weights.n:
        raise ValueError(f"swap index {i} out of range 1..{weights.n - 1}")
    swapped = weights.swap(i)
    mu = weights.drop_pair(i)
    indicator = _swap_indicator(weights, i)
    s_check = IdentityCheck(
        f"S recursion at s_{i}",
        S_direct(weights) + S_direct(swapped),
        2 * indicator * S_direct(mu),
    )
    t_check = IdentityCheck(
        f"T recursion at s_{i}",
        T_direct(weights) + T_direct(swapped),
        2 * indicator * T_direct(mu),
    )
    return RecursionCheck(i, s_check, t_check)


def _first_descent(weights: tuple[Fraction, ...]) -> int | None:
    for i in range(1, len(weights)):
        if weights[i - 1] > weights[i]:
            return i
    return None


def _recursive(
    closed_form: Callable[[WeightVector], int], weights: tuple[Fraction, ...]
) -> int:
    """Bubble-sort λ with the swap recursion, memoized for the length of one call."""
    memo: dict[tuple[Fraction, ...], int] = {}

    def evaluate(current: tuple[Fraction, ...]) -> int:
        if current in memo:
            return memo[current]
        vector = WeightVector(current)
        i = _first_descent(current)
        if i is None:
            value = closed_form(vector)
        else:
            value = -evaluate(vector.swap(i).weights)
            if _swap_indicator(vector, i):
                value += 2 * evaluate(vector.drop_pair(i).weights)
        memo[current] = value
        return value

    return evaluate(weights)


def S_recursive(weights: WeightVector) -> int:  # noqa: N802
    """S(λ) from the swap recursion and the increasing closed form, without face enumeration.

    Example:
        >>> S_recursive(WeightVector.of(1, -1))
        0
    """
    return _recursive(S_closed_increasing, weights.weights)


def T_recursive(weights: WeightVector) -> int:  # noqa: N802
    """T(λ) from the swap recursion and the increasing closed form."""
    return _recursive(T_closed_increasing, weights.weights)
