"""Exact rational weight vectors λ ∈ Q^n. ⚖️"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Iterator

from weightedcomplex.config import GROUND_SET_LIMIT
from weightedcomplex.errors import ParseError

_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_fraction(token: str) -> Fraction:
    """Parse an integer or "p/q" token exactly.

    Raises:
        ParseError: For floats, empty tokens, garbage or zero denominators.
    """
    text = token.strip()
    if not _TOKEN.match(text):
        if re.match(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$", text) or text.lower() in {
            "inf",
            "-inf",
            "nan",
        }:
            raise ParseError(
                f"{token!r} looks like a float; weights must be exact, write integers or p/q fractions"
            )
        raise ParseError(f"cannot parse {token!r} as an integer or p/q fraction")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise ParseError(f"{token!r} has a zero denominator") from exc


def format_fraction(value: Fraction) -> int | str:
    """Integers stay integers; everything else becomes "p/q"."""
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, slots=True)
class WeightVector:
    """A sequence λ1, ..., λn of exact rationals (zero, negative and repeated entries allowed)."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.weights) > GROUND_SET_LIMIT:
            raise ValueError(f"weight vectors hold at most {GROUND_SET_LIMIT} entries")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    @classmethod
    def of(cls, *values: int | str | Fraction) -> "WeightVector":
        """Convenience constructor: ``WeightVector.of(5, 1, -2, -3)`` or ``of("1/2", 3)``."""
        return cls(tuple(parse_fraction(v) if isinstance(v, str) else Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse a comma separated list such as ``"5,1,-2,-3"`` or ``"1/2,-1/3"``.

        Raises:
            ParseError: If any entry is not an integer or fraction, or the list is empty.
        """
        tokens = [t for t in text.split(",")]
        if not text.strip() or any(not t.strip() for t in tokens):
            raise ParseError(f"empty entry in weight list {text!r}")
        if len(tokens) > GROUND_SET_LIMIT:
            raise ParseError(f"weight list has {len(tokens)} entries, limit is {GROUND_SET_LIMIT}")
        return cls(tuple(parse_fraction(t) for t in tokens))

    @property
    def n(self) -> int:
        return len(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.weights)

    def __getitem__(self, i: int) -> Fraction:
        """1-based access, λ_i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"weight index {i} out of range 1..{self.n}")
        return self.weights[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(format_fraction(w)) for w in self.weights) + ")"

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def subset_weight(self, mask: int) -> Fraction:
        """λ_S for the subset S given as a bit mask."""
        total = Fraction(0)
        idx = 0
        while mask:
            if mask & 1:
                total += self.weights[idx]
            mask >>= 1
            idx += 1
        return total

    def scaled_integers(self) -> tuple[int, ...]:
        """Positive multiple of λ with integer entries (signs of every λ_S preserved)."""
        scale = reduce(lcm, (w.denominator for w in self.weights), 1)
        return tuple(int(w * scale) for w in self.weights)

    def positive_subsets(self) -> list[bool]:
        """Table indexed by bit mask: True iff λ_S > 0."""
        ints = self.scaled_integers()
        sums = [0] * (1 << self.n)
        for mask in range(1, 1 << self.n):
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + ints[low.bit_length() - 1]
        return [s > 0 for s in sums]

    def to_json(self) -> list[int | str]:
        return [format_fraction(w) for w in self.weights]

    def is_weakly_increasing(self) -> bool:
        return all(a <= b for a, b in zip(self.weights, self.weights[1:]))

    def is_weakly_decreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.weights, self.weights[1:]))

    def all_positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    def has_distinct_entries(self) -> bool:
        return len(set(self.weights)) == self.n

    def swap(self, i: int) -> "WeightVector":
        """s_i λ: exchange entries i and i+1."""
        if not 1 <= i < self.n:
            raise ValueError(f"swap index {i} out of range for n={self.n}")
        w = list(self.weights)
        w[i - 1], w[i] = w[i], w[i - 1]
        return WeightVector(tuple(w))

    def drop_pair(self, i: int) -> "WeightVector":
        """μ = (λ1, ..., λ_{i-1}, λ_{i+2}, ..., λn)."""
        if not 1 <= i < self.n:
            raise ValueError(f"index {i} out of range for n={self.n}")
        return WeightVector(self.weights[: i - 1] + self.weights[i + 1 :])


def subset_weight(weights: WeightVector, subset: Iterable[int] | int) -> Fraction:
    """λ_S = sum of λ_i over i in S; S is a bit mask or an iterable of 1-based elements."""
    if isinstance(subset, int):
        return weights.subset_weight(subset)
    return sum((weights[i] for i in subset), Fraction(0))


def reverse_weights(weights: WeightVector) -> WeightVector:
    """(λn, ..., λ1)."""
    return WeightVector(tuple(reversed(weights.weights)))
