"""The weighted subcomplex Σ(λ) of the type-A Coxeter complex. 🔺

A face is an ordered partition whose prefix block sums under λ are all
strictly positive. Faces form an upper order ideal, so Σ(λ) is a simplicial
complex whose facets are the prefix-positive permutations A(λ).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal

import numpy as np

from weightedcomplex.core.partitions import (
    OrderedPartition,
    elements_of,
    full_mask,
    mask_min,
    merge_covers,
)
from weightedcomplex.core.permutations import Permutation, lower_weak_bruhat_covers
from weightedcomplex.errors import check_cap
from weightedcomplex.logging_config import get_logger
from weightedcomplex.weighted.weights import WeightVector

logger = get_logger(__name__)

BlockOrder = Literal["ascending", "descending"]


@dataclass(frozen=True)
class WeightedComplex:
    """Faces P(λ) and facets A(λ) of Σ(λ) for one weight vector."""

    weights: WeightVector
    faces: frozenset[OrderedPartition]
    facets: frozenset[Permutation]

    @property
    def n(self) -> int:
        return self.weights.n

    @property
    def is_empty(self) -> bool:
        return not self.faces

    def sorted_faces(self) -> list[OrderedPartition]:
        """Faces in (number of blocks, block contents) order."""
        return sorted(
            self.faces, key=lambda s: (s.k, tuple(elements_of(b) for b in s.blocks))
        )

    def sorted_facets(self) -> list[Permutation]:
        return sorted(self.facets, key=lambda tau: tau.entries)


@dataclass(frozen=True, slots=True)
class Classification:
    """Topological type of Σ(λ): a sphere or ball of dimension n-2, or empty."""

    kind: Literal["sphere", "ball", "empty"]
    dimension: int

    def __str__(self) -> str:
        if self.kind == "empty":
            return "Empty"
        return f"{self.kind.capitalize()}({self.dimension})"


def in_P(weights: WeightVector, sigma: OrderedPartition) -> bool:  # noqa: N802
    """True iff every prefix block sum λ_{C1} + ... + λ_{Cj} is strictly positive."""
    if sigma.n != weights.n:
        raise ValueError(f"partition of [{sigma.n}] does not match n={weights.n}")
    prefix = 0
    for block in sigma.blocks:
        prefix += weights.subset_weight(block)
        if prefix <= 0:
            return False
    return True


def _prefix_positive_partitions(
    positive: list[bool], n: int
) -> Iterator[tuple[int, ...]]:
    full = full_mask(n)

    def extend(union: int, blocks: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if union == full:
            yield blocks
            return
        rest = full ^ union
        block = rest
        while block:
            if positive[union | block]:
                yield from extend(union | block, (*blocks, block))
            block = (block - 1) & rest

    if n and positive[full]:
        yield from extend(0, ())


def build_complex(weights: WeightVector) -> WeightedComplex:
    """Construct Σ(λ) by prefix-pruned search over ordered partitions.

    Args:
        weights: λ with 1 <= n <= `settings.ordered_partition_cap`.

    Returns:
        The complex with every face in P(λ) and every facet in A(λ). Empty
        (not even the empty face) when λ1 + ... + λn <= 0.

    Raises:
        CapExceededError: If n exceeds the ordered partition cap.

    Example:
        >>> c = build_complex(WeightVector.of(5, 1, -2, -3))
        >>> f_vector(c)
        (1, 7, 12, 6)
    """
    n = weights.n
    if n < 1:
        raise ValueError("Σ(λ) needs at least one weight")
    check_cap("complex construction", n, "ordered_partition_cap")
    positive = weights.positive_subsets()
    faces = frozenset(
        OrderedPartition(blocks, n) for blocks in _prefix_positive_partitions(positive, n)
    )
    facets = frozenset(
        Permutation(tuple(mask_min(b) for b in sigma.blocks))
        for sigma in faces
        if sigma.is_permutation
    )
    logger.debug(f"🔺 Σ{weights}: {len(faces)} faces, {len(facets)} facets")
    return WeightedComplex(weights, faces, facets)


def enumerate_facets(weights: WeightVector) -> Iterator[Permutation]:
    """Yield A(λ) in lexicographic order by depth-first search on prefix sums."""
    n = weights.n
    check_cap("facet enumeration", n, "ordered_partition_cap")
    values = weights.scaled_integers()

    def extend(prefix: tuple[int, ...], used: int, total: int) -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(prefix)
            return
        for element in range(1, n + 1):
            bit = 1 << (element - 1)
            if used & bit:
                continue
            running = total + values[element - 1]
            if running > 0:
                yield from extend((*prefix, element), used | bit, running)

    if n:
        yield from extend((), 0, 0)


def split_max(sigma: OrderedPartition, j: int, weights: WeightVector) -> OrderedPartition:
    """Split {a} off the front of block j, a the smallest element of maximal λ-value.

    Raises:
        ValueError: If block j is a singleton or sigma is not a face of Σ(λ).
    """
    _require_face(sigma, weights)
    block = sigma.blocks[j]
    members = elements_of(block)
    if len(members) < 2:
        raise ValueError(f"block {j} of {sigma} is a singleton")
    best = max(weights[e] for e in members)
    a = next(e for e in members if weights[e] == best)
    bit = 1 << (a - 1)
    return OrderedPartition(
        sigma.blocks[:j] + (bit, block ^ bit) + sigma.blocks[j + 1 :], sigma.n
    )


def split_block(
    sigma: OrderedPartition, j: int, subset: int, weights: WeightVector
) -> OrderedPartition:
    """Split block j into (B, C_j - B) when λ_B > 0, else (C_j - B, B).

    Raises:
        ValueError: If B is not a nonempty proper subset of C_j, or sigma is not a face.
    """
    _require_face(sigma, weights)
    block = sigma.blocks[j]
    if subset == 0 or subset & ~block or subset == block:
        raise ValueError(f"{elements_of(subset)} is not a nonempty proper subset of block {j}")
    rest = block ^ subset
    pair = (subset, rest) if weights.subset_weight(subset) > 0 else (rest, subset)
    return OrderedPartition(sigma.blocks[:j] + pair + sigma.blocks[j + 1 :], sigma.n)


def facet_below(sigma: OrderedPartition, weights: WeightVector) -> Permutation:
    """Refine sigma to a facet by repeatedly applying `split_max` to the leftmost non-singleton block."""
    _require_face(sigma, weights)
    current = sigma
    while not current.is_permutation:
        j = next(idx for idx, b in enumerate(current.blocks) if b.bit_count() > 1)
        current = split_max(current, j, weights)
    return current.to_permutation()


def _require_face(sigma: OrderedPartition, weights: WeightVector) -> None:
    if not in_P(weights, sigma):
        raise ValueError(f"{sigma} is not a face of Σ{weights}")


def f_vector(c: WeightedComplex) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_{n-2}): entry k-1 counts faces with k blocks."""
    counts = [0] * c.n
    for sigma in c.faces:
        counts[sigma.k - 1] += 1
    return tuple(counts)


def euler_sum(c: WeightedComplex) -> int:
    """Sum over faces of (-1)^|σ|."""
    return sum(-1 if sigma.k % 2 else 1 for sigma in c.faces)


def euler_closed_form(weights: WeightVector) -> int:
    """(-1)^n if every λ_i > 0, else 0."""
    return (-1) ** weights.n if weights.all_positive() else 0


def classify(c: WeightedComplex) -> Classification:
    """Sphere iff all λ_i > 0, ball iff Σλ_i > 0 with some λ_i <= 0, otherwise empty."""
    dimension = c.n - 2
    if c.weights.total <= 0:
        return Classification("empty", dimension)
    if c.weights.all_positive():
        return Classification("sphere", dimension)
    return Classification("ball", dimension)


def expected_betti(classification: Classification, n: int) -> tuple[int, ...]:
    """Reduced Betti numbers (dimension -1 first) of the classified type."""
    betti = [0] * n
    if classification.kind == "sphere":
        betti[n - 1] = 1
    return tuple(betti)


def cross_validate_classification(
    c: WeightedComplex, betti: tuple[int, ...] | None = None
) -> list[str]:
    """Compare `classify` with the face data, Euler sum and, if given, homology.

    Returns:
        Human-readable mismatch descriptions; empty when everything agrees.
    """
    kind = classify(c)
    problems: list[str] = []
    if (kind.kind == "empty") != c.is_empty:
        problems.append(f"classified {kind} but complex has {len(c.faces)} faces")
    expected_euler = (-1) ** c.n if kind.kind == "sphere" else 0
    if euler_sum(c) != expected_euler:
        problems.append(f"euler sum {euler_sum(c)} != {expected_euler} for {kind}")
    if betti is not None and betti != expected_betti(kind, c.n):
        problems.append(f"betti numbers {betti} do not match {kind}")
    return problems


def is_upper_ideal(c: WeightedComplex) -> bool:
    """Every merge of two adjacent blocks of a face is again a face."""
    return all(cover in c.faces for sigma in c.faces for cover in merge_covers(sigma))


def _lower_covers(sigma: OrderedPartition) -> Iterator[OrderedPartition]:
    for j, block in enumerate(sigma.blocks):
        members = elements_of(block)
        for size in range(1, len(members)):
            for chosen in combinations(members, size):
                front = sum(1 << (e - 1) for e in chosen)
                yield OrderedPartition(
                    sigma.blocks[:j] + (front, block ^ front) + sigma.blocks[j + 1 :], sigma.n
                )


def is_pure(c: WeightedComplex) -> bool:
    """Every face lies below a facet, found by search through lower covers inside P(λ)."""
    reaches: dict[OrderedPartition, bool] = {}

    def reaches_facet(sigma: OrderedPartition) -> bool:
        if sigma not in reaches:
            reaches[sigma] = sigma.is_permutation or any(
                lower in c.faces and reaches_facet(lower) for lower in _lower_covers(sigma)
            )
        return reaches[sigma]

    for sigma in sorted(c.faces, key=lambda s: -s.k):
        if not reaches_facet(sigma):
            return False
    return True


def is_lower_ideal(facets: frozenset[Permutation] | set[Permutation]) -> bool:
    """A set of permutations closed under weak Bruhat lower covers."""
    return all(lower <= facets for lower in map(lower_weak_bruhat_covers, facets))


def relabel_weights(tau: Permutation, weights: WeightVector) -> WeightVector:
    """τ(λ) under the left action, so τ(λ)_{τ(B)} = λ_B."""
    return WeightVector(tau.apply(weights.weights))


def relabel(tau: Permutation, target: WeightedComplex | WeightVector):
    """Apply τ to a weight vector, or facewise to a complex (result equals Σ(τ(λ)))."""
    if isinstance(target, WeightVector):
        return relabel_weights(tau, target)
    return WeightedComplex(
        relabel_weights(tau, target.weights),
        frozenset(sigma.relabel(tau) for sigma in target.faces),
        frozenset(tau.compose(facet) for facet in target.facets),
    )


@lru_cache(maxsize=32)
def _transition_layers(
    n: int, block_order: BlockOrder | None
) -> tuple[tuple[np.ndarray, np.ndarray, np.ndarray], ...]:
    """Per prefix size: arrays (prefix union, extended union, sign of the new block).

    The sign folds (-1) for the extra block together with the parity of the
    inversions the new block adds to f(σ) or g(σ).
    """
    full = full_mask(n)
    layers: list[tuple[list[int], list[int], list[int]]] = [([], [], []) for _ in range(n)]
    for union in range(full):
        rest = full ^ union
        block = rest
        while block:
            parity = 0
            if block_order is not None:
                for y in elements_of(block):
                    parity += (union >> y).bit_count()
                if block_order == "descending":
                    size = block.bit_count()
                    parity += size * (size - 1) // 2
            src, dst, sgn = layers[union.bit_count()]
            src.append(union)
            dst.append(union | block)
            sgn.append(1 if parity % 2 else -1)
            block = (block - 1) & rest
    return tuple(
        (np.array(s, dtype=np.int64), np.array(d, dtype=np.int64), np.array(g, dtype=np.int64))
        for s, d, g in layers
    )


def chain_sum(weights: WeightVector, block_order: BlockOrder | None = None) -> int:
    """Signed face sum of Σ(λ) organised by prefix unions.

    Computes Σ_σ (-1)^|σ| · ε(σ) where ε is 1 (block_order None), the sign of
    f(σ) ("ascending") or the sign of g(σ) ("descending"), without listing
    faces: a face is a path of prefix unions, each of positive weight.

    Raises:
        CapExceededError: If n exceeds `settings.ordered_partition_cap`.
    """
    n = weights.n
    if n == 0:
        return 1
    check_cap("face sum", n, "ordered_partition_cap")
    positive = np.array(weights.positive_subsets(), dtype=bool)
    values = np.zeros(1 << n, dtype=np.int64)
    values[0] = 1
    for src, dst, sgn in _transition_layers(n, block_order):
        keep = positive[dst] & (values[src] != 0)
        np.add.at(values, dst[keep], sgn[keep] * values[src[keep]])
    return int(values[full_mask(n)])
