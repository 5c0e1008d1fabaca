"""Combinatorics core: permutations, compositions, ordered partitions and matchings. 🧮"""

from weightedcomplex.core.compositions import Composition, composition_covers, compositions
from weightedcomplex.core.maps import R_of_perm, f_map, g_map, r_map, sign_relation_holds
from weightedcomplex.core.matchings import (
    Matching,
    crossings,
    enumerate_maximal_matchings,
    is_sstar,
    matching_lift,
    matching_sign,
    matching_to_sstar,
    maximal_matching_count,
    sstar_to_matching,
)
from weightedcomplex.core.partitions import (
    OrderedPartition,
    enumerate_ordered_partitions,
    merge_covers,
    op_type,
    ordered_bell,
)
from weightedcomplex.core.permutations import (
    Permutation,
    all_permutations,
    bruhat_rank_order,
    descent_composition,
    descent_set,
    inversions,
    is_weak_bruhat_linear_extension,
    lower_weak_bruhat_covers,
    random_linear_extension,
    sign,
    weak_bruhat_covers,
)

__all__ = [
    # Permutations 🔀
    "Permutation",
    "all_permutations",
    "inversions",
    "sign",
    "descent_set",
    "descent_composition",
    "weak_bruhat_covers",
    "lower_weak_bruhat_covers",
    "is_weak_bruhat_linear_extension",
    "bruhat_rank_order",
    "random_linear_extension",
    # Compositions
    "Composition",
    "compositions",
    "composition_covers",
    # Ordered partitions 🧱
    "OrderedPartition",
    "enumerate_ordered_partitions",
    "merge_covers",
    "op_type",
    "ordered_bell",
    # Maps 🗺️
    "f_map",
    "g_map",
    "r_map",
    "R_of_perm",
    "sign_relation_holds",
    # Matchings 🔗
    "Matching",
    "enumerate_maximal_matchings",
    "maximal_matching_count",
    "crossings",
    "matching_sign",
    "is_sstar",
    "sstar_to_matching",
    "matching_to_sstar",
    "matching_lift",
]
