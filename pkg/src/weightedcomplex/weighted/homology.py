"""Reduced GF(2) homology of Σ(λ) on its chain realization. 🕳️

Each face becomes the chain of its proper prefix unions (a simplex on the
vertex set B(λ) minus its bounds); the empty face ([n]) is the (-1)-simplex.
Boundary ranks come from XOR row reduction on numpy uint8 arrays.
"""

import numpy as np

from weightedcomplex.errors import check_cap
from weightedcomplex.logging_config import get_logger
from weightedcomplex.weighted.complex import WeightedComplex
from weightedcomplex.weighted.cube import face_to_chain

logger = get_logger(__name__)


def gf2_rank(matrix: np.ndarray) -> int:
    """Rank over GF(2) by Gaussian elimination with XOR row operations."""
    reduced = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    rows, cols = reduced.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.nonzero(reduced[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            reduced[[rank, pivot]] = reduced[[pivot, rank]]
        below = np.nonzero(reduced[rank + 1 :, col])[0] + rank + 1
        if below.size:
            reduced[below] ^= reduced[rank]
        rank += 1
    return rank


def boundary_matrix(
    simplices: list[tuple[int, ...]], faces_index: dict[tuple[int, ...], int]
) -> np.ndarray:
    """GF(2) boundary of d-simplices (columns) into (d-1)-simplices (rows)."""
    matrix = np.zeros((len(faces_index), len(simplices)), dtype=np.uint8)
    for col, simplex in enumerate(simplices):
        for drop in range(len(simplex)):
            matrix[faces_index[simplex[:drop] + simplex[drop + 1 :]], col] = 1
    return matrix


def homology_gf2(c: WeightedComplex) -> tuple[int, ...]:
    """Reduced Betti numbers over GF(2), indexed by dimension -1, 0, ..., n-2.

    Raises:
        CapExceededError: If n exceeds `settings.homology_cap`.

    Example:
        >>> homology_gf2(build_complex(WeightVector.of(1, 1, 1)))
        (0, 0, 1)
    """
    n = c.n
    check_cap("homology", n, "homology_cap")
    by_dimension: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for sigma in c.faces:
        chain = face_to_chain(sigma)
        by_dimension[len(chain)].append(chain)
    for simplices in by_dimension:
        simplices.sort()

    indices = [{s: i for i, s in enumerate(simplices)} for simplices in by_dimension]
    ranks = [0] * (n + 1)
    for d in range(1, n):
        if by_dimension[d] and by_dimension[d - 1]:
            ranks[d] = gf2_rank(boundary_matrix(by_dimension[d], indices[d - 1]))
    betti = tuple(
        len(by_dimension[d]) - ranks[d] - ranks[d + 1] for d in range(n)
    )
    logger.debug(f"🕳️  Reduced GF(2) Betti numbers of Σ{c.weights}: {betti}")
    return betti
