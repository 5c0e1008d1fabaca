"""Hypothesis strategies for weight vectors and permutations."""

from fractions import Fraction

from hypothesis import strategies as st

from weightedcomplex.core.permutations import Permutation
from weightedcomplex.weighted.weights import WeightVector

entries = st.fractions(min_value=-9, max_value=9, max_denominator=6)


@st.composite
def weight_vectors(
    draw: st.DrawFn,
    min_n: int = 1,
    max_n: int = 6,
    distinct: bool = False,
    positive_total: bool = False,
    first_nonpositive: bool = False,
    order: str | None = None,
) -> WeightVector:
    """Rational λ with entries p/q, |p/q| <= 9, q <= 6.

    `order` is "increasing" or "decreasing" to sort the drawn entries.
    """
    values = draw(st.lists(entries, min_size=min_n, max_size=max_n, unique=distinct))
    if first_nonpositive:
        values[0] = -abs(values[0])
    if order is not None:
        values.sort(reverse=order == "decreasing")
    if positive_total and sum(values, Fraction(0)) <= 0:
        # Shifting every entry keeps distinctness and the relative order.
        shift = (abs(sum(values, Fraction(0))) + 1) / len(values)
        values = [v + shift for v in values]
    return WeightVector(tuple(values))


def positive_weight_vectors(min_n: int = 1, max_n: int = 10) -> st.SearchStrategy[WeightVector]:
    return st.lists(
        st.fractions(min_value=Fraction(1, 6), max_value=9, max_denominator=6),
        min_size=min_n,
        max_size=max_n,
    ).map(lambda values: WeightVector(tuple(values)))


@st.composite
def permutations_of(draw: st.DrawFn, n: int) -> Permutation:
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))
