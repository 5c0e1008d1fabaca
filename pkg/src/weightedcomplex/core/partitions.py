"""Ordered set partitions of [n]: the faces of the type-A Coxeter complex. 🧱

Blocks are stored as bit masks (bit i-1 <-> element i), so unions,
intersections and prefix sums reduce to integer operations.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from weightedcomplex.config import GROUND_SET_LIMIT
from weightedcomplex.core.compositions import Composition
from weightedcomplex.core.permutations import Permutation
from weightedcomplex.errors import check_cap
from weightedcomplex.logging_config import get_logger

logger = get_logger(__name__)


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for element in elements:
        mask |= 1 << (element - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted elements of a bit mask."""
    out = []
    element = 1
    while mask:
        if mask & 1:
            out.append(element)
        mask >>= 1
        element += 1
    return tuple(out)


def mask_min(mask: int) -> int:
    return (mask & -mask).bit_length()


def mask_max(mask: int) -> int:
    return mask.bit_length()


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class OrderedPartition:
    """A sequence (C1, ..., Ck) of disjoint nonempty blocks covering [n]."""

    blocks: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= GROUND_SET_LIMIT:
            raise ValueError(f"ground set size must be in 1..{GROUND_SET_LIMIT}, got {self.n}")
        if not self.blocks:
            raise ValueError("an ordered partition needs at least one block")
        seen = 0
        for block in self.blocks:
            if block <= 0:
                raise ValueError("blocks must be nonempty")
            if seen & block:
                raise ValueError("blocks must be pairwise disjoint")
            seen |= block
        if seen != full_mask(self.n):
            raise ValueError(f"blocks do not cover [{self.n}]")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "OrderedPartition":
        """Build from explicit element lists, e.g. ``[[1, 3], [2, 4]]``."""
        masks = tuple(mask_of(block) for block in blocks)
        if n is None:
            n = max((mask_max(m) for m in masks), default=0)
        return cls(masks, n)

    @classmethod
    def from_permutation(cls, tau: Permutation) -> "OrderedPartition":
        """The all-singleton partition ({tau_1}, ..., {tau_n})."""
        return cls(tuple(1 << (v - 1) for v in tau.entries), tau.n)

    @classmethod
    def whole(cls, n: int) -> "OrderedPartition":
        """The one-block partition ([n]): the empty face."""
        return cls((full_mask(n),), n)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def is_permutation(self) -> bool:
        return self.k == self.n

    def block_elements(self, j: int) -> tuple[int, ...]:
        """Sorted elements of block j (0-based)."""
        return elements_of(self.blocks[j])

    def as_lists(self) -> list[list[int]]:
        return [list(elements_of(block)) for block in self.blocks]

    def to_permutation(self) -> Permutation:
        if not self.is_permutation:
            raise ValueError(f"{self.label()} has non-singleton blocks")
        return Permutation(tuple(mask_min(block) for block in self.blocks))

    def label(self) -> str:
        """Display label: block elements ascending and concatenated, blocks joined by '-'."""
        joiner = "" if self.n <= 9 else ","
        return "-".join(joiner.join(str(e) for e in elements_of(b)) for b in self.blocks)

    def __str__(self) -> str:
        return self.label()

    def refines(self, other: "OrderedPartition") -> bool:
        """True iff self <= other in the ordered partition poset.

        That is, every block of `other` is a union of consecutive blocks of
        `self`, taken in order.
        """
        if other.n != self.n:
            return False
        idx = 0
        for target in other.blocks:
            acc = 0
            while acc != target:
                if idx >= self.k:
                    return False
                acc |= self.blocks[idx]
                idx += 1
                if acc & ~target:
                    return False
        return idx == self.k

    def relabel(self, tau: Permutation) -> "OrderedPartition":
        """Apply tau elementwise to every block, keeping the block order."""
        if tau.n != self.n:
            raise ValueError("relabeling permutation has the wrong length")
        return OrderedPartition(
            tuple(mask_of(tau(e) for e in elements_of(block)) for block in self.blocks),
            self.n,
        )


def op_type(sigma: OrderedPartition) -> Composition:
    """Block sizes (|C1|, ..., |Ck|)."""
    return Composition(tuple(block.bit_count() for block in sigma.blocks))


def merge_covers(sigma: OrderedPartition) -> set[OrderedPartition]:
    """The k-1 partitions obtained by merging two adjacent blocks."""
    b = sigma.blocks
    return {
        OrderedPartition(b[:i] + (b[i] | b[i + 1],) + b[i + 2 :], sigma.n)
        for i in range(len(b) - 1)
    }


@lru_cache(maxsize=4096)
def _sorted_submasks(mask: int) -> tuple[int, ...]:
    """Nonempty submasks of `mask`, ordered lexicographically by their element tuples."""
    subs = []
    sub = mask
    while sub:
        subs.append(sub)
        sub = (sub - 1) & mask
    return tuple(sorted(subs, key=elements_of))


def _ordered_partitions_of(remaining: int, blocks_left: int) -> Iterator[tuple[int, ...]]:
    if blocks_left == 1:
        yield (remaining,)
        return
    for block in _sorted_submasks(remaining):
        rest = remaining ^ block
        if rest.bit_count() < blocks_left - 1:
            continue
        for tail in _ordered_partitions_of(rest, blocks_left - 1):
            yield (block, *tail)


def enumerate_ordered_partitions(n: int) -> Iterator[OrderedPartition]:
    """Yield every ordered partition of [n] exactly once.

    Order is lexicographic by (number of blocks, block contents), so streams
    are reproducible across runs.

    Args:
        n: Ground set size, at most `settings.ordered_partition_cap`.

    Raises:
        CapExceededError: If n exceeds the configured cap.

    Example:
        >>> sum(1 for _ in enumerate_ordered_partitions(3))
        13
    """
    if n < 1:
        raise ValueError(f"ordered partitions need n >= 1, got {n}")
    check_cap("ordered partition enumeration", n, "ordered_partition_cap")
    logger.debug(f"🧱 Enumerating {ordered_bell(n):,} ordered partitions of [{n}]")
    for k in range(1, n + 1):
        for blocks in _ordered_partitions_of(full_mask(n), k):
            yield OrderedPartition(blocks, n)


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """Number of ordered partitions of [n] (ordered Bell / Fubini number)."""
    if n == 0:
        return 1
    return sum(comb(n, i) * ordered_bell(n - i) for i in range(1, n + 1))
