"""Closed forms of S and T for weakly increasing λ."""

from weightedcomplex.weighted.weights import WeightVector


def _require_increasing(weights: WeightVector) -> None:
    if not weights.is_weakly_increasing():
        raise ValueError(f"{weights} is not weakly increasing")


def S_closed_increasing(weights: WeightVector) -> int:  # noqa: N802
    """(-1)^n if λ1 > 0, else 0; the empty sequence gives 1.

    Raises:
        ValueError: If λ is not weakly increasing.
    """
    _require_increasing(weights)
    if weights.n == 0:
        return 1
    return (-1) ** weights.n if weights[1] > 0 else 0


def T_closed_increasing(weights: WeightVector) -> int:  # noqa: N802
    """1 if λ1 > 0 (so every entry is positive), else 0; the empty sequence gives 1."""
    _require_increasing(weights)
    if weights.n == 0:
        return 1
    return 1 if weights[1] > 0 else 0
