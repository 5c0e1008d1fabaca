"""Maps between ordered partitions and permutations. 🗺️

f and g read a face off as a facet (blocks ascending / descending); r and R
merge adjacent blocks whose elements already appear in increasing order.
Together they give the interval decomposition [R(tau), tau] of the Coxeter
complex.
"""

from math import comb

from weightedcomplex.core.partitions import (
    OrderedPartition,
    elements_of,
    mask_max,
    mask_min,
    op_type,
)
from weightedcomplex.core.permutations import Permutation, sign


def f_map(sigma: OrderedPartition) -> Permutation:
    """Concatenate the blocks, each sorted ascending.

    Example:
        >>> str(f_map(OrderedPartition.from_blocks([[2, 3], [1, 4]])))
        '2314'
    """
    return Permutation(tuple(e for block in sigma.blocks for e in elements_of(block)))


def g_map(sigma: OrderedPartition) -> Permutation:
    """Concatenate the blocks, each sorted descending.

    Example:
        >>> str(g_map(OrderedPartition.from_blocks([[1, 2], [3, 4]])))
        '2143'
    """
    return Permutation(
        tuple(e for block in sigma.blocks for e in reversed(elements_of(block)))
    )


def r_map(sigma: OrderedPartition) -> OrderedPartition:
    """Merge adjacent blocks with max(C_i) < min(C_{i+1}) until none remain."""
    blocks = list(sigma.blocks)
    merged = True
    while merged:
        merged = False
        for i in range(len(blocks) - 1):
            if mask_max(blocks[i]) < mask_min(blocks[i + 1]):
                blocks[i : i + 2] = [blocks[i] | blocks[i + 1]]
                merged = True
                break
    return OrderedPartition(tuple(blocks), sigma.n)


def R_of_perm(tau: Permutation) -> OrderedPartition:  # noqa: N802
    """Blocks are the maximal ascending runs of tau.

    Example:
        >>> str(R_of_perm(Permutation.parse("1324")))
        '13-24'
    """
    blocks: list[int] = []
    previous = 0
    for value in tau.entries:
        bit = 1 << (value - 1)
        if blocks and value > previous:
            blocks[-1] |= bit
        else:
            blocks.append(bit)
        previous = value
    return OrderedPartition(tuple(blocks), tau.n)


def sign_relation_holds(sigma: OrderedPartition) -> bool:
    """Check sign(g(sigma)) == (-1)^(sum C(c_i, 2)) * sign(f(sigma))."""
    exponent = sum(comb(c, 2) for c in op_type(sigma))
    return sign(g_map(sigma)) == (-1) ** exponent * sign(f_map(sigma))
