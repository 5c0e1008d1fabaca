"""Weighted complex Σ(λ): construction, shellings, B(λ) and topology. 🔺"""

from weightedcomplex.weighted.complex import (
    Classification,
    WeightedComplex,
    build_complex,
    chain_sum,
    classify,
    cross_validate_classification,
    enumerate_facets,
    euler_closed_form,
    euler_sum,
    f_vector,
    facet_below,
    in_P,
    is_lower_ideal,
    is_pure,
    is_upper_ideal,
    relabel,
    split_block,
    split_max,
)
from weightedcomplex.weighted.cube import (
    CubePoset,
    ELCheck,
    Infinitesimal,
    build_cube_poset,
    chain_to_face,
    el_labeling_verify,
    face_to_chain,
    perturb,
)
from weightedcomplex.weighted.homology import homology_gf2
from weightedcomplex.weighted.shelling import (
    ShellingCertificate,
    ShellingCheck,
    bruhat_shelling_order,
    decomposition,
    lexicographic_facet_order,
    linear_extension_order,
    verify_shelling,
)
from weightedcomplex.weighted.weights import (
    WeightVector,
    format_fraction,
    parse_fraction,
    reverse_weights,
    subset_weight,
)

__all__ = [
    # Weights ⚖️
    "WeightVector",
    "parse_fraction",
    "format_fraction",
    "subset_weight",
    "reverse_weights",
    # Complex 🔺
    "WeightedComplex",
    "Classification",
    "in_P",
    "build_complex",
    "enumerate_facets",
    "split_max",
    "split_block",
    "facet_below",
    "f_vector",
    "euler_sum",
    "euler_closed_form",
    "chain_sum",
    "classify",
    "cross_validate_classification",
    "is_upper_ideal",
    "is_pure",
    "is_lower_ideal",
    "relabel",
    # Shelling 🐚
    "ShellingCertificate",
    "ShellingCheck",
    "bruhat_shelling_order",
    "decomposition",
    "verify_shelling",
    "lexicographic_facet_order",
    "linear_extension_order",
    # B(λ) 🧊
    "CubePoset",
    "ELCheck",
    "Infinitesimal",
    "build_cube_poset",
    "el_labeling_verify",
    "perturb",
    "face_to_chain",
    "chain_to_face",
    # Homology 🕳️
    "homology_gf2",
]
