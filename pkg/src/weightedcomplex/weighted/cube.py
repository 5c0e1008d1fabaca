"""The subposet B(λ) of the Boolean lattice and its EL-labeling. 🧊

Elements are the subsets S of [n] with λ_S > 0, plus ∅. The cover from T to
T ∪ {a} carries the label -λ_a. Nonempty faces of Σ(λ) correspond to chains
of proper prefix unions, which is the order complex of B(λ) minus its bounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from weightedcomplex.config import settings
from weightedcomplex.core.partitions import OrderedPartition, elements_of, full_mask
from weightedcomplex.errors import check_cap
from weightedcomplex.logging_config import get_logger
from weightedcomplex.weighted.weights import WeightVector

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True, order=True)
class Infinitesimal:
    """value + eps·ε with ε a positive infinitesimal; compares lexicographically."""

    value: Fraction
    eps: Fraction = Fraction(0)

    def __neg__(self) -> "Infinitesimal":
        return Infinitesimal(-self.value, -self.eps)


def perturb(weights: WeightVector) -> tuple[Infinitesimal, ...]:
    """λ_i + i·ε, refused when some nonempty λ_S is zero (Σ(λ) would change).

    Raises:
        ValueError: If a nonempty subset has weight exactly zero.
    """
    positive = weights.positive_subsets()
    negated = WeightVector(tuple(-w for w in weights.weights)).positive_subsets()
    zero = [m for m in range(1, 1 << weights.n) if not positive[m] and not negated[m]]
    if zero:
        raise ValueError(
            f"perturbing {weights} would change Σ(λ): λ_S = 0 for S = {elements_of(zero[0])}"
        )
    return tuple(Infinitesimal(w, Fraction(i)) for i, w in enumerate(weights.weights, 1))


@dataclass(frozen=True)
class CubePoset:
    """Elements of B(λ) as bit masks, with gradedness when it was checked."""

    weights: WeightVector
    elements: frozenset[int]
    graded: bool | None = None

    @property
    def n(self) -> int:
        return self.weights.n

    def label(self, lower: int, upper: int) -> Fraction:
        """Label -λ_a of the cover lower ⋖ lower ∪ {a}."""
        added = upper ^ lower
        if added & lower or added.bit_count() != 1:
            raise ValueError("labels exist only on covers T ⋖ T ∪ {a}")
        return -self.weights[added.bit_length()]


def is_graded_by_cardinality(elements: frozenset[int], n: int) -> bool:
    """Every comparable pair T ⊂ S with |S - T| >= 2 has an element T ∪ {a} between them."""
    check_cap("graded check", n, "graded_check_cap")
    for upper in elements:
        sub = upper
        while sub:
            sub = (sub - 1) & upper
            lower = sub
            gap = upper ^ lower
            if lower not in elements or gap.bit_count() < 2:
                continue
            if not any(lower | (1 << p) in elements for p in range(n) if gap >> p & 1):
                return False
    return True


def build_cube_poset(weights: WeightVector) -> CubePoset:
    """B(λ) = {S : λ_S > 0} ∪ {∅}, with gradedness verified up to `settings.graded_check_cap`."""
    n = weights.n
    positive = weights.positive_subsets()
    elements = frozenset(m for m in range(1 << n) if m == 0 or positive[m])
    graded: bool | None = None
    if n <= settings.graded_check_cap:
        graded = is_graded_by_cardinality(elements, n)
    else:
        logger.info(f"⏭️  Skipping gradedness check for n={n} (cap {settings.graded_check_cap})")
    return CubePoset(weights, elements, graded)


@dataclass
class ELCheck:
    """Outcome of the EL-labeling check; `counterexample` is the first failing (T, S)."""

    passed: bool
    intervals_checked: int
    counterexample: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def _interval_ok(
    poset: CubePoset,
    lower: int,
    upper: int,
    labels: Sequence[Fraction | Infinitesimal],
) -> bool:
    def label(a: int) -> Fraction | Infinitesimal:
        return labels[a - 1]

    reach: dict[int, bool] = {}

    def can_reach(x: int) -> bool:
        if x not in reach:
            reach[x] = x == upper or any(
                can_reach(x | (1 << p))
                for p in range(poset.n)
                if (upper ^ x) >> p & 1 and x | (1 << p) in poset.elements
            )
        return reach[x]

    if not can_reach(lower):
        return False

    def steps(x: int) -> list[int]:
        return [
            p + 1
            for p in range(poset.n)
            if (upper ^ x) >> p & 1 and x | (1 << p) in poset.elements and can_reach(x | (1 << p))
        ]

    rising_words: list[list[Fraction | Infinitesimal]] = []

    def rising(x: int, last: Fraction | Infinitesimal | None, word: list) -> None:
        if x == upper:
            rising_words.append(list(word))
            return
        for a in steps(x):
            lab = label(a)
            if last is None or lab >= last:
                word.append(lab)
                rising(x | (1 << (a - 1)), lab, word)
                word.pop()

    rising(lower, None, [])
    if len(rising_words) != 1:
        return False

    least: list[Fraction | Infinitesimal] = []
    x = lower
    while x != upper:
        a = min(steps(x), key=label)
        least.append(label(a))
        x |= 1 << (a - 1)
    return least == rising_words[0]


def el_labeling_verify(weights: WeightVector, use_perturbation: bool = False) -> ELCheck:
    """Check that -λ_a is an EL-labeling of B(λ).

    Every interval [T, S] must have exactly one saturated chain with weakly
    rising labels, and its label word must be the lexicographically least.

    Args:
        weights: λ with Σλ_i > 0 and pairwise distinct entries.
        use_perturbation: Label with -(λ_a + a·ε) instead, which accepts
            repeated entries when no nonempty λ_S is zero.

    Raises:
        ValueError: On repeated entries (without perturbation) or Σλ_i <= 0.
        CapExceededError: If n exceeds `settings.el_labeling_cap`.
    """
    if weights.total <= 0:
        raise ValueError(f"B(λ) has no top element for {weights}: Σλ_i <= 0")
    labels: tuple[Fraction | Infinitesimal, ...]
    if use_perturbation:
        labels = tuple(-x for x in perturb(weights))
    elif not weights.has_distinct_entries():
        raise ValueError(f"{weights} has repeated entries; perturb first")
    else:
        labels = tuple(-w for w in weights.weights)
    check_cap("EL-labeling check", weights.n, "el_labeling_cap")

    poset = build_cube_poset(weights)
    checked = 0
    for upper in sorted(poset.elements):
        for lower in sorted(poset.elements):
            if lower == upper or lower & ~upper:
                continue
            checked += 1
            if not _interval_ok(poset, lower, upper, labels):
                logger.warning(
                    f"⚠️  EL condition fails on [{elements_of(lower)}, {elements_of(upper)}]"
                )
                return ELCheck(False, checked, (elements_of(lower), elements_of(upper)))
    return ELCheck(True, checked)


def face_to_chain(
    sigma: OrderedPartition, weights: WeightVector | None = None
) -> tuple[int, ...]:
    """Proper nonempty prefix unions C1 ⊂ C1∪C2 ⊂ ... of sigma, as bit masks.

    Raises:
        ValueError: If `weights` is given and sigma is not a face of Σ(λ).
    """
    chain: list[int] = []
    union = 0
    for block in sigma.blocks[:-1]:
        union |= block
        if weights is not None and weights.subset_weight(union) <= 0:
            raise ValueError(f"{sigma} is not a face of Σ{weights}")
        chain.append(union)
    if weights is not None and weights.total <= 0:
        raise ValueError(f"{sigma} is not a face of Σ{weights}")
    return tuple(chain)


def chain_to_face(chain: Sequence[int], n: int) -> OrderedPartition:
    """Inverse of `face_to_chain`: successive differences of the chain, closed off by [n]."""
    blocks: list[int] = []
    previous = 0
    for union in (*chain, full_mask(n)):
        if union & previous != previous or union == previous:
            raise ValueError("chain must be strictly increasing and end below [n]")
        blocks.append(union ^ previous)
        previous = union
    return OrderedPartition(tuple(blocks), n)
