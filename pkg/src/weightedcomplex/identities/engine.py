"""Evaluate S(λ) and T(λ) by every route that fits the configured caps. ⚙️"""

from typing import Callable, Iterable

from weightedcomplex.errors import CapExceededError
from weightedcomplex.identities.decreasing import S_decreasing_formula
from weightedcomplex.identities.models import IdentityCheck, IdentityReport
from weightedcomplex.identities.pfaffian import T_via_pfaffian
from weightedcomplex.identities.recursion import S_recursive, T_recursive
from weightedcomplex.identities.sums import S_direct, T_direct, reverse_identity_sum
from weightedcomplex.logging_config import get_logger
from weightedcomplex.weighted.weights import WeightVector

logger = get_logger(__name__)

ROUTES = ("S", "T", "Tpf", "Srec", "Trec", "Sdec")


def _attempt(
    report: IdentityReport, route: str, compute: Callable[[WeightVector], int]
) -> int | None:
    try:
        return compute(report.weights)
    except CapExceededError as exc:
        report.skipped[route] = str(exc)
        logger.debug(f"⏭️  Route {route} skipped: {exc}")
        return None


def evaluate_identities(
    weights: WeightVector, routes: Iterable[str] = ROUTES
) -> IdentityReport:
    """Compute the requested routes and check that they agree.

    Every value is compared with S (direct, or recursive when the direct
    sum is over its cap), T-side values after the factor (-1)^n. Routes
    refused by a cap are recorded in `skipped` rather than raised.

    Args:
        weights: λ to evaluate.
        routes: Subset of ``ROUTES``.

    Returns:
        IdentityReport with every computed value and the agreement checks.
    """
    wanted = set(routes)
    unknown = wanted - set(ROUTES)
    if unknown:
        raise ValueError(f"unknown routes {sorted(unknown)}; choose from {ROUTES}")
    report = IdentityReport(weights)
    sign_n = (-1) ** weights.n

    if "S" in wanted:
        report.s_direct = _attempt(report, "S", S_direct)
    if "T" in wanted:
        report.t_direct = _attempt(report, "T", T_direct)
    if "Tpf" in wanted:
        report.t_pfaffian = _attempt(report, "Tpf", T_via_pfaffian)
    if "Srec" in wanted:
        report.s_recursive = S_recursive(weights)
    if "Trec" in wanted:
        report.t_recursive = T_recursive(weights)
    if "Sdec" in wanted:
        if weights.is_weakly_decreasing():
            report.s_decreasing = _attempt(report, "Sdec", S_decreasing_formula)
        else:
            report.skipped["Sdec"] = "λ is not weakly decreasing"

    s_anchor = report.s_direct if report.s_direct is not None else report.s_recursive
    candidates = [
        ("(-1)^n T_direct", report.t_direct, sign_n),
        ("(-1)^n T_pfaffian", report.t_pfaffian, sign_n),
        ("(-1)^n T_recursive", report.t_recursive, sign_n),
        ("S_decreasing", report.s_decreasing, 1),
    ]
    if report.s_direct is not None:
        candidates.append(("S_recursive", report.s_recursive, 1))

    checks: list[IdentityCheck] = report.checks
    if s_anchor is not None:
        for name, value, scale in candidates:
            if value is not None:
                checks.append(IdentityCheck(f"S == {name}", s_anchor, scale * value))
        if report.s_direct is not None:
            checks.append(
                IdentityCheck("S == reversed f-sign sum", report.s_direct, reverse_identity_sum(weights))
            )
    elif report.t_direct is not None and report.t_pfaffian is not None:
        checks.append(IdentityCheck("T_direct == T_pfaffian", report.t_direct, report.t_pfaffian))

    if not report.passed:
        failing = [c.name for c in checks if not c.passed]
        logger.warning(f"⚠️  Identity checks failed for {weights}: {failing}")
    return report
