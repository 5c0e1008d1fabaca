"""Compositions of n and the adjacent-add order on Comp(n)."""

from dataclasses import dataclass
from itertools import product
from typing import Iterator


@dataclass(frozen=True, slots=True)
class Composition:
    """A list of positive integers (c1, ..., ck) summing to n."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise ValueError("a composition needs at least one part")
        if any(part < 1 for part in self.parts):
            raise ValueError(f"composition parts must be positive, got {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.parts) + ")"


def compositions(n: int) -> Iterator[Composition]:
    """Yield all 2^(n-1) compositions of n.

    Each composition corresponds to a choice of cut points in {1, ..., n-1};
    the order follows the binary words of those choices.

    Args:
        n: Positive integer.

    Yields:
        Every composition of n exactly once.

    Example:
        >>> [str(c) for c in compositions(3)]
        ['(3)', '(2,1)', '(1,2)', '(1,1,1)']
    """
    if n < 1:
        raise ValueError(f"compositions need n >= 1, got {n}")
    for cuts in product((False, True), repeat=n - 1):
        parts: list[int] = []
        run = 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


def composition_covers(c: Composition) -> set[Composition]:
    """Compositions covering `c`: add two adjacent entries."""
    parts = c.parts
    return {
        Composition(parts[:i] + (parts[i] + parts[i + 1],) + parts[i + 2 :])
        for i in range(len(parts) - 1)
    }
