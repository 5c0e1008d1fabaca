"""Identity engine: S(λ) and T(λ) by independent routes. ⚙️"""

from weightedcomplex.identities.base_case import S_closed_increasing, T_closed_increasing
from weightedcomplex.identities.decreasing import (
    S_decreasing_formula,
    b_stat,
    composition_identity,
    interval_sum_identity,
    seq_a,
    seq_b,
)
from weightedcomplex.identities.engine import ROUTES, evaluate_identities
from weightedcomplex.identities.indicators import c1, c2, c_of_matching
from weightedcomplex.identities.models import IdentityCheck, IdentityReport, RecursionCheck
from weightedcomplex.identities.pfaffian import (
    SkewMatrix,
    T_via_pfaffian,
    matching_matrix,
    pfaffian,
    pfaffian_squared_equals_det,
    random_skew_matrix,
)
from weightedcomplex.identities.recursion import S_recursive, T_recursive, verify_recursion
from weightedcomplex.identities.sums import S_direct, S_from_faces, T_direct, reverse_identity_sum

__all__ = [
    # Indicators
    "c1",
    "c2",
    "c_of_matching",
    # Sums ➕➖
    "S_direct",
    "S_from_faces",
    "T_direct",
    "reverse_identity_sum",
    # Pfaffian 🧮
    "SkewMatrix",
    "pfaffian",
    "pfaffian_squared_equals_det",
    "random_skew_matrix",
    "matching_matrix",
    "T_via_pfaffian",
    # Closed forms and recursion 🔁
    "S_closed_increasing",
    "T_closed_increasing",
    "verify_recursion",
    "S_recursive",
    "T_recursive",
    # Decreasing λ 📉
    "seq_a",
    "seq_b",
    "composition_identity",
    "interval_sum_identity",
    "b_stat",
    "S_decreasing_formula",
    # Reports
    "IdentityCheck",
    "RecursionCheck",
    "IdentityReport",
    "ROUTES",
    "evaluate_identities",
]
