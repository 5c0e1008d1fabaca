"""Shared pytest fixtures for the weightedcomplex test suite."""

from typing import Callable

import numpy as np
import pytest

from weightedcomplex.weighted.complex import WeightedComplex, build_complex
from weightedcomplex.weighted.weights import WeightVector


@pytest.fixture
def make_weights() -> Callable[..., WeightVector]:
    """Factory fixture: ``make_weights(5, 1, -2, -3)`` or ``make_weights("1/2", 3)``."""

    def _make(*values: int | str) -> WeightVector:
        return WeightVector.of(*values)

    return _make


@pytest.fixture
def make_complex(make_weights) -> Callable[..., WeightedComplex]:
    """Factory fixture building Σ(λ) straight from entries."""

    def _make(*values: int | str) -> WeightedComplex:
        return build_complex(make_weights(*values))

    return _make


@pytest.fixture
def figure_weights(make_weights) -> WeightVector:
    """λ = (5, 1, -2, -3): a two-dimensional ball with f-vector (1, 7, 12, 6)."""
    return make_weights(5, 1, -2, -3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240501)

