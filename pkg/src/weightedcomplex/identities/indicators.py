"""Edge and vertex weights c1, c2 and c(p, λ) of a maximal matching."""

from fractions import Fraction

from weightedcomplex.core.matchings import Matching
from weightedcomplex.weighted.weights import WeightVector


def c1(a: Fraction | int) -> int:
    """1 iff a > 0."""
    return 1 if a > 0 else 0


def c2(a: Fraction | int, b: Fraction | int) -> int:
    """1 if a, b > 0; 2 if a > -b >= 0; otherwise 0.

    Example:
        >>> c2(3, -1), c2(1, -1), c2(-1, 5)
        (2, 0, 0)
    """
    if a > 0 and b > 0:
        return 1
    if b <= 0 and a + b > 0:
        return 2
    return 0


def c_of_matching(p: Matching, weights: WeightVector) -> int:
    """Product of c2(λ_i, λ_j) over edges i < j, times c1(λ_i) for an isolated vertex i."""
    if p.n != weights.n:
        raise ValueError(f"matching on [{p.n}] does not match n={weights.n}")
    value = 1
    for i, j in p.edges:
        value *= c2(weights[i], weights[j])
        if not value:
            return 0
    if p.isolated is not None:
        value *= c1(weights[p.isolated])
    return value
