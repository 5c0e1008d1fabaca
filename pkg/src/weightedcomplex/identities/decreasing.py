"""S(λ) for weakly decreasing λ through the interval decomposition. 📉

Over a single interval [R(τ), τ] the signed face sum collapses to a product
over the ascending runs of τ, which gives
S(λ) = (-1)^n · Σ_{τ ∈ A(λ)} (-1)^τ · b(τ).
"""

from math import comb, prod

from weightedcomplex.core.compositions import compositions
from weightedcomplex.core.maps import g_map
from weightedcomplex.core.partitions import OrderedPartition
from weightedcomplex.core.permutations import Permutation, descent_composition, sign
from weightedcomplex.identities.models import IdentityCheck
from weightedcomplex.weighted.complex import enumerate_facets
from weightedcomplex.weighted.weights import WeightVector


def seq_a(i: int) -> int:
    """a_i = (-1)^(C(i,2) + 1) for i >= 1."""
    if i < 1:
        raise ValueError(f"a_i is defined for i >= 1, got {i}")
    return -1 if (comb(i, 2) + 1) % 2 else 1


def seq_b(i: int) -> int:
    """b_0 = b_1 = 1 and b_i = 2 for i >= 2."""
    if i < 0:
        raise ValueError(f"b_i is defined for i >= 0, got {i}")
    return 1 if i <= 1 else 2


def composition_identity(n: int) -> IdentityCheck:
    """Σ over compositions c of n of a_{c1}···a_{ck}, against (-1)^n · b_n."""
    if n < 1:
        raise ValueError(f"composition identity needs n >= 1, got {n}")
    lhs = sum(prod(seq_a(part) for part in c) for c in compositions(n))
    return IdentityCheck(f"composition identity n={n}", lhs, (-1) ** n * seq_b(n))


def interval_sum_identity(n: int) -> IdentityCheck:
    """Σ over [R(id), id] of (-1)^|σ| · (-1)^g(σ), against (-1)^n · b_n.

    The interval consists of the ordered partitions of [n] into consecutive
    runs 1..c1, c1+1..c1+c2, and so on, one per composition.
    """
    if n < 1:
        raise ValueError(f"interval sum identity needs n >= 1, got {n}")
    total = 0
    for c in compositions(n):
        blocks = []
        start = 0
        for part in c:
            blocks.append(((1 << part) - 1) << start)
            start += part
        sigma = OrderedPartition(tuple(blocks), n)
        total += (-1) ** sigma.k * sign(g_map(sigma))
    return IdentityCheck(f"interval sum identity n={n}", total, (-1) ** n * seq_b(n))


def b_stat(tau: Permutation) -> int:
    """2 to the number of ascending runs of τ of length at least 2."""
    return prod(seq_b(part) for part in descent_composition(tau))


def S_decreasing_formula(weights: WeightVector) -> int:  # noqa: N802
    """(-1)^n · Σ_{τ ∈ A(λ)} (-1)^τ · b(τ).

    Raises:
        ValueError: If λ is not weakly decreasing.
        CapExceededError: If n exceeds the facet enumeration cap.
    """
    if not weights.is_weakly_decreasing():
        raise ValueError(f"{weights} is not weakly decreasing")
    total = sum(sign(tau) * b_stat(tau) for tau in enumerate_facets(weights))
    return (-1) ** weights.n * total
