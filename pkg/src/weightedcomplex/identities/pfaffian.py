"""Exact integer Pfaffians and the Pfaffian form of T(λ). 🧮

The Pfaffian is expanded along the smallest remaining index, memoized on the
set of remaining indices, so the expansion visits at most 2^order states
instead of (order-1)!! matchings.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from sympy import Matrix

from weightedcomplex.errors import check_cap
from weightedcomplex.identities.indicators import c1, c2
from weightedcomplex.weighted.weights import WeightVector


@dataclass(frozen=True, slots=True)
class SkewMatrix:
    """Skew-symmetric integer matrix stored by its strict upper triangle.

    `upper[i][j - i - 1]` holds A_{i+1, j+1} for 0-based i < j.
    """

    order: int
    upper: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("matrix order must be nonnegative")
        if len(self.upper) != self.order or any(
            len(row) != self.order - i - 1 for i, row in enumerate(self.upper)
        ):
            raise ValueError(f"upper triangle has the wrong shape for order {self.order}")

    @classmethod
    def from_function(cls, order: int, entry: Callable[[int, int], int]) -> "SkewMatrix":
        """Build from entry(i, j) for 1-based i < j."""
        return cls(
            order,
            tuple(tuple(int(entry(i, j)) for j in range(i + 1, order + 1)) for i in range(1, order + 1)),
        )

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SkewMatrix":
        """Take the strict upper triangle of a square matrix after checking skew symmetry."""
        order = len(rows)
        for i in range(order):
            if len(rows[i]) != order:
                raise ValueError("matrix must be square")
            for j in range(order):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not skew")
        return cls.from_function(order, lambda i, j: rows[i - 1][j - 1])

    def __call__(self, i: int, j: int) -> int:
        """A_{i,j} for 1-based indices."""
        if i == j:
            return 0
        if i < j:
            return self.upper[i - 1][j - i - 1]
        return -self.upper[j - 1][i - j - 1]

    def dense(self) -> list[list[int]]:
        return [[self(i, j) for j in range(1, self.order + 1)] for i in range(1, self.order + 1)]


def pfaffian(matrix: SkewMatrix) -> int:
    """Pf(A) by the signed perfect-matching expansion.

    Pairing the smallest remaining index with the t-th remaining index
    (t = 1, 2, ...) carries sign (-1)^(t-1), so each matching contributes
    with the sign of its crossing number.

    Raises:
        ValueError: For odd order.
        CapExceededError: If the order exceeds `settings.pfaffian_max_order`.

    Example:
        >>> pfaffian(SkewMatrix.from_function(4, lambda i, j: 1))
        1
    """
    order = matrix.order
    if order % 2:
        raise ValueError(f"Pfaffian needs even order, got {order}")
    if order == 0:
        return 1
    check_cap("Pfaffian expansion", order, "pfaffian_max_order")

    @lru_cache(maxsize=None)
    def expand(remaining: int) -> int:
        if not remaining:
            return 1
        first = (remaining & -remaining).bit_length()
        rest = remaining ^ (1 << (first - 1))
        total = 0
        t = 0
        scan = rest
        while scan:
            low = scan & -scan
            t += 1
            partner = low.bit_length()
            entry = matrix(first, partner)
            if entry:
                term = entry * expand(rest ^ low)
                total += term if t % 2 else -term
            scan ^= low
        return total

    return expand((1 << order) - 1)


def pfaffian_squared_equals_det(matrix: SkewMatrix) -> bool:
    """Pf(A)^2 == det(A), with the determinant taken exactly by sympy."""
    determinant = Matrix(matrix.dense()).det() if matrix.order else 1
    return pfaffian(matrix) ** 2 == int(determinant)


def random_skew_matrix(order: int, rng: np.random.Generator, bound: int = 3) -> SkewMatrix:
    """Skew matrix with upper entries uniform in [-bound, bound]."""
    draws = rng.integers(-bound, bound + 1, size=(order, order))
    return SkewMatrix.from_function(order, lambda i, j: int(draws[i - 1, j - 1]))


def matching_matrix(weights: WeightVector) -> SkewMatrix:
    """A_{i,j} = c2(λ_i, λ_j) for i < j <= n, plus column n+1 of c1(λ_i) when n is odd."""
    n = weights.n
    order = n + n % 2

    def entry(i: int, j: int) -> int:
        if j == n + 1:
            return c1(weights[i])
        return c2(weights[i], weights[j])

    return SkewMatrix.from_function(order, entry)


def T_via_pfaffian(weights: WeightVector) -> int:  # noqa: N802
    """T(λ) as the Pfaffian of `matching_matrix`; the empty sequence gives 1.

    Raises:
        CapExceededError: If n (rounded up to even) exceeds `settings.pfaffian_max_order`.
    """
    return pfaffian(matching_matrix(weights))
