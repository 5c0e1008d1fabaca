"""Batch helpers for sharding sweep populations across workers. 🚀"""

from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


def batch_generator(items: Sequence[T], batch_size: int) -> Iterator[Sequence[T]]:
    """Generate batches from a sequence of items. 📦

    Yields consecutive slices of the input with the specified batch size.
    The last batch may be smaller if len(items) is not evenly divisible by batch_size.

    Args:
        items: Sequence of items to batch.
        batch_size: Number of items per batch.

    Yields:
        Slices of size batch_size (or smaller for the final batch).

    Example:
        >>> for batch in batch_generator([1, 2, 3, 4, 5], 2):
        ...     print(batch)
        [1, 2]
        [3, 4]
        [5]
    """
    if batch_size < 1:
        raise ValueError(f"batch_size must be at least 1, got {batch_size}")
    for i in range(0, len(items), batch_size):
        yield items[i : i + batch_size]
