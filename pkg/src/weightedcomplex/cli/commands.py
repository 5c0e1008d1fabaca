"""compute, complex and shell subcommands: each builds one JsonReport."""

from typing import Any, Sequence

from weightedcomplex.cli.serialization import (
    complex_to_payload,
    identity_checks,
    load_order_file,
)
from weightedcomplex.core.permutations import Permutation
from weightedcomplex.errors import CapExceededError
from weightedcomplex.identities.base_case import S_closed_increasing, T_closed_increasing
from weightedcomplex.identities.engine import ROUTES, evaluate_identities
from weightedcomplex.logging_config import get_logger
from weightedcomplex.schemas import Check, JsonReport
from weightedcomplex.utils import make_rng
from weightedcomplex.weighted.complex import (
    WeightedComplex,
    build_complex,
    classify,
    cross_validate_classification,
    euler_closed_form,
    euler_sum,
    expected_betti,
    f_vector,
    is_pure,
    is_upper_ideal,
)
from weightedcomplex.weighted.cube import el_labeling_verify
from weightedcomplex.weighted.homology import homology_gf2
from weightedcomplex.weighted.shelling import (
    bruhat_shelling_order,
    decomposition,
    lexicographic_facet_order,
    verify_shelling,
)
from weightedcomplex.weighted.weights import WeightVector

logger = get_logger(__name__)

ORDER_SOURCES = ("linear-extension", "lex-el", "file", "decomposition")

_ROUTE_RESULTS = {
    "S": "s_direct",
    "T": "t_direct",
    "Tpf": "t_pfaffian",
    "Srec": "s_recursive",
    "Trec": "t_recursive",
    "Sdec": "s_decreasing",
}


def _perm_lists(perms: Sequence[Permutation]) -> list[list[int]]:
    return [list(tau.entries) for tau in perms]


# =============================================================================
# compute
# =============================================================================


def cmd_compute(weights: WeightVector, which: Sequence[str] = ROUTES) -> JsonReport:
    """Evaluate the requested routes for S(λ)/T(λ) and check they agree.

    For weakly increasing λ the closed forms are checked as well.
    """
    routes = list(dict.fromkeys(which))
    report = evaluate_identities(weights, routes)
    results: dict[str, Any] = {
        route: getattr(report, _ROUTE_RESULTS[route])
        for route in routes
        if getattr(report, _ROUTE_RESULTS[route]) is not None
    }
    results["skipped"] = dict(report.skipped)

    checks = identity_checks(report.checks)
    if weights.is_weakly_increasing():
        if report.s_direct is not None:
            checks.append(
                Check(
                    name="S == closed form (weakly increasing)",
                    expected=S_closed_increasing(weights),
                    actual=report.s_direct,
                    passed=report.s_direct == S_closed_increasing(weights),
                )
            )
        if report.t_direct is not None:
            checks.append(
                Check(
                    name="T == closed form (weakly increasing)",
                    expected=T_closed_increasing(weights),
                    actual=report.t_direct,
                    passed=report.t_direct == T_closed_increasing(weights),
                )
            )

    return JsonReport(
        command="compute",
        inputs={"lambda": weights.to_json(), "n": weights.n, "routes": routes},
        results=results,
        checks=checks,
    )


# =============================================================================
# complex
# =============================================================================


def _el_verdict(weights: WeightVector) -> tuple[dict[str, Any], Check | None]:
    if weights.total <= 0:
        return {"status": "not applicable: Σλ_i <= 0"}, None
    if not weights.has_distinct_entries():
        return {"status": "not applicable: repeated entries"}, None
    try:
        verdict = el_labeling_verify(weights)
    except CapExceededError as exc:
        return {"status": f"skipped: {exc}"}, None
    payload = {
        "status": "checked",
        "passed": verdict.passed,
        "intervals_checked": verdict.intervals_checked,
        "counterexample": [list(part) for part in verdict.counterexample]
        if verdict.counterexample
        else None,
    }
    return payload, Check(name="EL-labeling", expected=True, actual=verdict.passed, passed=verdict.passed)


def _complex_checks(c: WeightedComplex, betti: tuple[int, ...] | None) -> list[Check]:
    euler = euler_sum(c)
    closed = euler_closed_form(c.weights)
    problems = cross_validate_classification(c, betti)
    pure = is_pure(c)
    upper = is_upper_ideal(c)
    return [
        Check(name="euler sum == closed form", expected=closed, actual=euler, passed=euler == closed),
        Check(
            name="classification agrees with faces",
            expected=[],
            actual=problems,
            passed=not problems,
        ),
        Check(name="pure", expected=True, actual=pure, passed=pure),
        Check(name="upper ideal", expected=True, actual=upper, passed=upper),
    ]


def cmd_complex(weights: WeightVector, export: bool = False) -> JsonReport:
    """Build Σ(λ) and report its f-vector, facets, type and topology checks.

    Raises:
        CapExceededError: If n exceeds `settings.ordered_partition_cap`.
    """
    c = build_complex(weights)
    kind = classify(c)
    results: dict[str, Any] = {
        "f_vector": list(f_vector(c)),
        "facet_count": len(c.facets),
        "facets": _perm_lists(c.sorted_facets()),
        "classification": str(kind),
        "euler_sum": euler_sum(c),
        "euler_closed_form": euler_closed_form(weights),
    }

    betti: tuple[int, ...] | None = None
    try:
        betti = homology_gf2(c)
        results["reduced_betti_gf2"] = list(betti)
    except CapExceededError as exc:
        results["reduced_betti_gf2"] = f"skipped: {exc}"

    el_payload, el_check = _el_verdict(weights)
    results["el_labeling"] = el_payload
    if export:
        results["faces"] = complex_to_payload(c)["faces"]

    checks = _complex_checks(c, betti)
    if betti is not None:
        expected = list(expected_betti(kind, c.n))
        checks.append(
            Check(name="homology matches type", expected=expected, actual=list(betti), passed=expected == list(betti))
        )
    if el_check is not None:
        checks.append(el_check)

    logger.info(f"🔺 Σ{weights}: {kind}, f-vector {results['f_vector']}")
    return JsonReport(
        command="complex",
        inputs={"lambda": weights.to_json(), "n": weights.n, "export": export},
        results=results,
        checks=checks,
    )


# =============================================================================
# shell
# =============================================================================


def _orders_for(
    c: WeightedComplex,
    source: str,
    order_file: str | None,
    seed: int,
    samples: int,
) -> list[list[Permutation]]:
    if source == "linear-extension":
        rng = make_rng(seed)
        return [bruhat_shelling_order(c, rng) for _ in range(samples)]
    if source == "lex-el":
        return [lexicographic_facet_order(c.weights, c.facets)]
    if source == "decomposition":
        return [list(decomposition(c).facet_order)]
    if order_file is None:
        raise ValueError("--order-source file needs --order-file")
    return [load_order_file(order_file, c.n)]


def cmd_shell(
    weights: WeightVector,
    source: str = "linear-extension",
    order_file: str | None = None,
    seed: int = 0,
    samples: int = 1,
) -> JsonReport:
    """Check one or more facet orders of Σ(λ) for shellability.

    Args:
        weights: λ with Σλ_i > 0.
        source: One of ``ORDER_SOURCES``.
        order_file: JSON array of permutations, for ``source="file"``.
        seed: Seed for sampled linear extensions.
        samples: Number of sampled linear extensions.

    Raises:
        ValueError: If Σλ_i <= 0, the source is unknown, or the file order is
            not an enumeration of the facets.
        ParseError: If the order file cannot be read.
        CapExceededError: If n exceeds `settings.shelling_cap`.
    """
    if source not in ORDER_SOURCES:
        raise ValueError(f"unknown order source {source!r}; choose from {ORDER_SOURCES}")
    if weights.total <= 0:
        raise ValueError(f"Σ{weights} is empty (Σλ_i <= 0): nothing to shell")
    if samples < 1:
        raise ValueError("samples must be at least 1")

    c = build_complex(weights)
    top_betti = expected_betti(classify(c), c.n)[-1]
    entries: list[dict[str, Any]] = []
    checks: list[Check] = []
    for index, order in enumerate(_orders_for(c, source, order_file, seed, samples)):
        result = verify_shelling(c, order)
        entries.append(
            {
                "order": _perm_lists(order),
                "passed": result.passed,
                "definition_ok": result.definition_ok,
                "interval_ok": result.interval_ok,
                "first_bad_index": result.first_bad_index,
                "restrictions": [r.label() for r in result.restrictions],
                "homology_facets": _perm_lists(result.homology_facets),
            }
        )
        checks.append(
            Check(name=f"order {index} shells Σ(λ)", expected=True, actual=result.passed, passed=result.passed)
        )
        checks.append(
            Check(
                name=f"order {index} definition and interval checks agree",
                expected=True,
                actual=result.consistent,
                passed=result.consistent,
            )
        )
        if result.passed:
            count = len(result.homology_facets)
            checks.append(
                Check(
                    name=f"order {index} homology facets == top Betti number",
                    expected=top_betti,
                    actual=count,
                    passed=count == top_betti,
                )
            )

    results: dict[str, Any] = {"source": source, "facet_count": len(c.facets), "orders": entries}
    if source == "lex-el":
        el_payload, el_check = _el_verdict(weights)
        results["el_labeling"] = el_payload
        if el_check is not None:
            checks.append(el_check)

    return JsonReport(
        command="shell",
        inputs={
            "lambda": weights.to_json(),
            "n": weights.n,
            "order_source": source,
            "order_file": order_file,
            "seed": seed,
            "samples": samples,
        },
        results=results,
        checks=checks,
    )
