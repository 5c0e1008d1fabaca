"""Permutations in one-line notation and the weak Bruhat order. 🔀

Permutations are immutable values; the symmetric group acts on vectors on
the left, i.e. position i of tau(x) holds x at position tau^-1(i).
"""

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from math import factorial
from typing import Iterable, Iterator, Sequence, TypeVar

import numpy as np

from weightedcomplex.config import GROUND_SET_LIMIT
from weightedcomplex.core.compositions import Composition

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation tau_1 tau_2 ... tau_n of [n] in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if not 1 <= n <= GROUND_SET_LIMIT:
            raise ValueError(f"permutation length must be in 1..{GROUND_SET_LIMIT}, got {n}")
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"{self.entries} is not a bijection of [{n}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """The maximum n ... 2 1 of the weak Bruhat order."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse "2143" (n <= 9) or a comma/space separated list like "2,1,4,3"."""
        cleaned = text.strip()
        if "," in cleaned or " " in cleaned:
            tokens = [t for t in cleaned.replace(",", " ").split() if t]
            return cls(tuple(int(t) for t in tokens))
        return cls(tuple(int(ch) for ch in cleaned))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for position, value in enumerate(self.entries, 1):
            inv[value - 1] = position
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self o other, i.e. i -> self(other(i))."""
        if other.n != self.n:
            raise ValueError("cannot compose permutations of different lengths")
        return Permutation(tuple(self.entries[v - 1] for v in other.entries))

    def apply(self, vector: Sequence[T]) -> tuple[T, ...]:
        """Left action on a vector: result[i] = vector[tau^-1(i)].

        Example:
            >>> Permutation((2, 3, 1)).apply(("a", "b", "c"))
            ('c', 'a', 'b')
        """
        if len(vector) != self.n:
            raise ValueError(f"vector length {len(vector)} does not match n={self.n}")
        inv = self.inverse().entries
        return tuple(vector[inv[i] - 1] for i in range(self.n))

    def swap(self, i: int) -> "Permutation":
        """Right multiplication by the simple transposition s_i (swap positions i, i+1)."""
        if not 1 <= i < self.n:
            raise ValueError(f"simple transposition index {i} out of range for n={self.n}")
        e = list(self.entries)
        e[i - 1], e[i] = e[i], e[i - 1]
        return Permutation(tuple(e))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yield the n! permutations of [n] in lexicographic order."""
    for entries in _itertools_permutations(range(1, n + 1)):
        yield Permutation(entries)


def inversions(tau: Permutation) -> int:
    """Count pairs i < j with tau_i > tau_j.

    Example:
        >>> inversions(Permutation.parse("2143"))
        2
    """
    e = tau.entries
    return sum(1 for i in range(len(e)) for j in range(i + 1, len(e)) if e[i] > e[j])


def sign(tau: Permutation) -> int:
    """(-1)^inv(tau)."""
    return -1 if inversions(tau) % 2 else 1


def descent_set(tau: Permutation) -> tuple[int, ...]:
    e = tau.entries
    return tuple(i for i in range(1, len(e)) if e[i - 1] > e[i])


def descent_composition(tau: Permutation) -> Composition:
    """Lengths of the maximal ascending runs of tau.

    Example:
        >>> str(descent_composition(Permutation.parse("1324")))
        '(2,2)'
    """
    cuts = (0, *descent_set(tau), tau.n)
    return Composition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def weak_bruhat_covers(tau: Permutation) -> set[Permutation]:
    """Upper covers tau s_i with tau_i < tau_{i+1}."""
    e = tau.entries
    return {tau.swap(i) for i in range(1, len(e)) if e[i - 1] < e[i]}


def lower_weak_bruhat_covers(tau: Permutation) -> set[Permutation]:
    """Lower covers tau s_i with tau_i > tau_{i+1}."""
    e = tau.entries
    return {tau.swap(i) for i in range(1, len(e)) if e[i - 1] > e[i]}


def is_weak_bruhat_linear_extension(order: Sequence[Permutation]) -> bool:
    """Check that `order` lists all of S_n with every cover going forward.

    Args:
        order: Sequence containing each permutation of [n] exactly once.

    Returns:
        True iff tau appears before tau' whenever tau is covered by tau'.

    Raises:
        ValueError: If the sequence has duplicates, mixed lengths or the wrong length.
    """
    if not order:
        raise ValueError("empty order")
    n = order[0].n
    if any(tau.n != n for tau in order):
        raise ValueError("order mixes permutations of different lengths")
    if len(order) != factorial(n):
        raise ValueError(f"order has {len(order)} entries, expected {factorial(n)}")
    position = {tau: idx for idx, tau in enumerate(order)}
    if len(position) != len(order):
        raise ValueError("order contains duplicate permutations")

    return all(
        position[tau] < position[cover]
        for tau in order
        for cover in weak_bruhat_covers(tau)
    )


def bruhat_rank_order(perms: Iterable[Permutation]) -> list[Permutation]:
    """Sort by inversion count, ties broken lexicographically (a linear extension)."""
    return sorted(perms, key=lambda tau: (inversions(tau), tau.entries))


def random_linear_extension(
    perms: Iterable[Permutation], rng: np.random.Generator
) -> list[Permutation]:
    """Draw a random linear extension of the weak Bruhat order restricted to `perms`.

    The set must be a lower order ideal, so that covers inside the set generate
    the induced order.

    Args:
        perms: Permutations forming a lower order ideal of the weak Bruhat order.
        rng: Seeded numpy generator.

    Returns:
        The permutations in an order compatible with every cover relation.
    """
    members = set(perms)
    pending: dict[Permutation, int] = {}
    for tau in members:
        lower = lower_weak_bruhat_covers(tau)
        if not lower <= members:
            raise ValueError(f"{tau} has a lower cover outside the set (not a lower ideal)")
        pending[tau] = len(lower)

    available = sorted((tau for tau, count in pending.items() if count == 0), key=lambda t: t.entries)
    result: list[Permutation] = []
    while available:
        chosen = available.pop(int(rng.integers(len(available))))
        result.append(chosen)
        for cover in weak_bruhat_covers(chosen):
            if cover in pending:
                pending[cover] -= 1
                if pending[cover] == 0:
                    available.append(cover)
        available.sort(key=lambda t: t.entries)
    return result
