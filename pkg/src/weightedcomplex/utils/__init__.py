"""Shared utilities: batching and seeded populations. 🛠️"""

from weightedcomplex.utils.batch_processing import batch_generator
from weightedcomplex.utils.sampling import (
    grid_weights,
    make_rng,
    random_distinct_weights,
    random_nonpositive_first,
    random_positive_weights,
    random_weakly_decreasing,
    random_weakly_increasing,
    random_weights,
)

__all__ = [
    # Batch processing 📦
    "batch_generator",
    # Populations 🎲
    "make_rng",
    "random_weights",
    "random_positive_weights",
    "random_nonpositive_first",
    "random_weakly_increasing",
    "random_weakly_decreasing",
    "random_distinct_weights",
    "grid_weights",
]
