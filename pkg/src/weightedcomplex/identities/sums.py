"""The alternating sums S(λ) over faces and T(λ) over maximal matchings. ➕➖"""

from functools import lru_cache
from math import comb

from weightedcomplex.core.maps import g_map
from weightedcomplex.core.matchings import Matching, enumerate_maximal_matchings, matching_sign
from weightedcomplex.core.permutations import sign
from weightedcomplex.errors import check_cap
from weightedcomplex.identities.indicators import c_of_matching
from weightedcomplex.weighted.complex import WeightedComplex, chain_sum
from weightedcomplex.weighted.weights import WeightVector, reverse_weights


@lru_cache(maxsize=16)
def _signed_matchings(n: int) -> tuple[tuple[Matching, int], ...]:
    return tuple((p, matching_sign(p)) for p in enumerate_maximal_matchings(n))


def T_direct(weights: WeightVector) -> int:  # noqa: N802
    """T(λ) = Σ_p (-1)^p · c(p, λ) over all maximal matchings p of [n].

    The empty sequence gives 1 (the empty matching).

    Raises:
        CapExceededError: If n exceeds `settings.matching_cap`.
    """
    n = weights.n
    if n == 0:
        return 1
    check_cap("matching enumeration", n, "matching_cap")
    return sum(s * c_of_matching(p, weights) for p, s in _signed_matchings(n))


def S_direct(weights: WeightVector) -> int:  # noqa: N802
    """S(λ) = Σ_σ (-1)^|σ| · (-1)^g(σ) over all faces of Σ(λ), the empty face included.

    The empty sequence gives 1.

    Raises:
        CapExceededError: If n exceeds `settings.ordered_partition_cap`.
    """
    return chain_sum(weights, "descending")


def S_from_faces(c: WeightedComplex) -> int:  # noqa: N802
    """S(λ) summed literally over an already built complex."""
    return sum((-1) ** sigma.k * sign(g_map(sigma)) for sigma in c.faces)


def reverse_identity_sum(weights: WeightVector) -> int:
    """(-1)^C(n,2) · Σ over faces σ of Σ(reversed λ) of (-1)^|σ| · (-1)^f(σ).

    Equals S(λ).
    """
    flipped = reverse_weights(weights)
    return (-1) ** comb(weights.n, 2) * chain_sum(flipped, "ascending")
