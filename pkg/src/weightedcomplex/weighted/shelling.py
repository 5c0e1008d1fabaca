"""Shelling certificates for Σ(λ). 🐚

Two independent routes:

- `decomposition` assigns every face to the interval [R(f(σ)), f(σ)] after
  sorting λ decreasingly, and checks the intervals tile the face set.
- `verify_shelling` takes any facet order and checks each new facet against
  the union of its predecessors, once by the purity definition and once by
  the restriction-interval condition. Both verdicts are reported.

Faces of a single facet τ are indexed by cut sets: bit p-1 set means a block
boundary between positions p and p+1 of τ.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from weightedcomplex.core.maps import R_of_perm, f_map
from weightedcomplex.core.partitions import OrderedPartition
from weightedcomplex.core.permutations import (
    Permutation,
    bruhat_rank_order,
    random_linear_extension,
)
from weightedcomplex.errors import DecompositionError, check_cap
from weightedcomplex.logging_config import get_logger
from weightedcomplex.weighted.complex import WeightedComplex, relabel
from weightedcomplex.weighted.weights import WeightVector

logger = get_logger(__name__)


@dataclass(frozen=True)
class ShellingCertificate:
    """Facet order with the restriction face R(F_j) of every facet."""

    facet_order: tuple[Permutation, ...]
    restrictions: tuple[OrderedPartition, ...]
    homology_facets: tuple[Permutation, ...]
    sorting_permutation: Permutation | None = None


@dataclass
class ShellingCheck:
    """Outcome of checking one facet order."""

    passed: bool
    definition_ok: bool
    interval_ok: bool
    first_bad_index: int | None = None
    restrictions: list[OrderedPartition] = field(default_factory=list)
    homology_facets: list[Permutation] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """The definition check and the interval check agree."""
        return self.definition_ok == self.interval_ok


def face_from_cuts(tau: Permutation, cuts: int) -> OrderedPartition:
    """The face of facet τ whose block boundaries are the set bits of `cuts`."""
    blocks: list[int] = []
    current = 0
    for position, value in enumerate(tau.entries, 1):
        current |= 1 << (value - 1)
        if position == tau.n or cuts >> (position - 1) & 1:
            blocks.append(current)
            current = 0
    return OrderedPartition(tuple(blocks), tau.n)


def _sort_permutation(weights: WeightVector) -> Permutation:
    """τ with τ(λ) weakly decreasing (stable in the original positions)."""
    order = sorted(range(1, weights.n + 1), key=lambda i: (-weights[i], i))
    return Permutation(tuple(order)).inverse()


def _interval_members(tau: Permutation) -> list[OrderedPartition]:
    """[R(τ), τ]: ascent positions of τ may be cut or not, descents are always cut."""
    descents = 0
    ascents: list[int] = []
    for p in range(1, tau.n):
        if tau(p) > tau(p + 1):
            descents |= 1 << (p - 1)
        else:
            ascents.append(p - 1)
    members = []
    for choice in range(1 << len(ascents)):
        cuts = descents
        for idx, bit in enumerate(ascents):
            if choice >> idx & 1:
                cuts |= 1 << bit
        members.append(face_from_cuts(tau, cuts))
    return members


def decomposition(c: WeightedComplex) -> ShellingCertificate:
    """Partition the faces of Σ(λ) into intervals [R(τ), τ], τ ∈ A(λ).

    λ is first sorted weakly decreasing by relabeling; the certificate is
    reported in the original labels together with the sorting permutation.

    Raises:
        DecompositionError: If the intervals overlap, leave a face uncovered
            or reach outside Σ(λ).
    """
    tau = _sort_permutation(c.weights)
    sorted_complex = relabel(tau, c)
    covered: Counter[OrderedPartition] = Counter()
    for facet in sorted_complex.facets:
        for member in _interval_members(facet):
            if member not in sorted_complex.faces:
                raise DecompositionError(f"{member} lies in [R({facet}), {facet}] but not in Σ(λ)")
            covered[member] += 1
    overlaps = [str(sigma) for sigma, count in covered.items() if count > 1]
    if overlaps:
        raise DecompositionError(f"intervals overlap at {overlaps[:5]}")
    missing = [str(sigma) for sigma in sorted_complex.faces if sigma not in covered]
    if missing:
        raise DecompositionError(f"faces outside every interval: {missing[:5]}")
    for sigma in sorted_complex.faces:
        top = f_map(sigma)
        if top not in sorted_complex.facets or not sigma.refines(R_of_perm(top)):
            raise DecompositionError(f"{sigma} is not in [R(f(σ)), f(σ)] with f(σ)={top}")

    inverse = tau.inverse()
    order = bruhat_rank_order(sorted_complex.facets)
    restrictions = [R_of_perm(facet) for facet in order]
    homology = [facet for facet, r in zip(order, restrictions) if r.is_permutation]
    logger.debug(
        f"🐚 Decomposed Σ{c.weights} into {len(order)} intervals, {len(homology)} homology facets"
    )
    return ShellingCertificate(
        facet_order=tuple(inverse.compose(facet) for facet in order),
        restrictions=tuple(r.relabel(inverse) for r in restrictions),
        homology_facets=tuple(inverse.compose(facet) for facet in homology),
        sorting_permutation=tau,
    )


def _face_key(tau: Permutation, cuts: int) -> tuple[int, ...]:
    return face_from_cuts(tau, cuts).blocks


def _maximal_sizes_ok(old: set[int], n_cuts: int) -> bool:
    """All maximal cut sets of a down-closed family have n_cuts - 1 elements."""
    for cuts in old:
        if cuts.bit_count() == n_cuts - 1:
            continue
        if not any(cuts | (1 << p) in old for p in range(n_cuts) if not cuts >> p & 1):
            return False
    return True


def verify_shelling(c: WeightedComplex, order: Sequence[Permutation]) -> ShellingCheck:
    """Check that `order` shells Σ(λ).

    For each facet F_j the faces it shares with F_1, ..., F_{j-1} must form a
    pure complex of dimension n-3 (definition), and its new faces must form
    one interval [R(F_j), F_j] (restriction condition). The check stops at the
    first facet failing either.

    Raises:
        ValueError: If `order` is not an enumeration of the facets of c.
        CapExceededError: If n exceeds `settings.shelling_cap`.
    """
    if len(order) != len(c.facets) or set(order) != c.facets:
        raise ValueError("order must list every facet of the complex exactly once")
    check_cap("shelling verification", c.n, "shelling_cap")
    n_cuts = c.n - 1
    all_cuts = (1 << n_cuts) - 1
    seen: set[tuple[int, ...]] = set()
    result = ShellingCheck(passed=True, definition_ok=True, interval_ok=True)

    for index, facet in enumerate(order):
        old: set[int] = set()
        new: list[int] = []
        keys = {}
        for cuts in range(all_cuts + 1):
            key = _face_key(facet, cuts)
            keys[cuts] = key
            if key in seen:
                old.add(cuts)
            else:
                new.append(cuts)

        definition_ok = index == 0 or _maximal_sizes_ok(old, n_cuts)
        restriction = all_cuts
        for cuts in new:
            restriction &= cuts
        interval_ok = bool(new) and restriction in new and len(new) == 1 << (
            n_cuts - restriction.bit_count()
        )

        if not (definition_ok and interval_ok):
            result.passed = False
            result.definition_ok = definition_ok
            result.interval_ok = interval_ok
            result.first_bad_index = index
            if definition_ok != interval_ok:
                logger.error(
                    f"❌ Shelling checks disagree at facet {index} ({facet}): "
                    f"definition={definition_ok} interval={interval_ok}"
                )
            return result

        face = face_from_cuts(facet, restriction)
        result.restrictions.append(face)
        if restriction == all_cuts:
            result.homology_facets.append(facet)
        seen.update(keys.values())
    return result


def lexicographic_facet_order(weights: WeightVector, facets: frozenset[Permutation]) -> list[Permutation]:
    """Order A(λ) by the label words (-λ_{τ1}, ..., -λ_{τn}) of their maximal chains.

    Equal labels are separated by the infinitesimal perturbation λ_i + i·ε,
    which places larger i first.
    """
    return sorted(
        facets, key=lambda tau: tuple((-weights[v], -v) for v in tau.entries)
    )


def linear_extension_order(
    facets: frozenset[Permutation], rng: np.random.Generator | None = None
) -> list[Permutation]:
    """A weak Bruhat linear extension of A(λ): random when `rng` is given, rank order otherwise."""
    if rng is None:
        return bruhat_rank_order(facets)
    return random_linear_extension(facets, rng)


def bruhat_shelling_order(
    c: WeightedComplex, rng: np.random.Generator | None = None
) -> list[Permutation]:
    """A Bruhat linear extension order of the facets of any Σ(λ).

    The extension is taken in the frame where λ is weakly decreasing, where
    A(λ) is a lower ideal, and carried back to the original labels.
    """
    tau = _sort_permutation(c.weights)
    inverse = tau.inverse()
    sorted_facets = frozenset(tau.compose(facet) for facet in c.facets)
    return [inverse.compose(facet) for facet in linear_extension_order(sorted_facets, rng)]
