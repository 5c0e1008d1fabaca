"""Invariant sweeps over λ populations, fanned out across worker threads. 🧪"""

from concurrent.futures import FIRST_COMPLETED, Future, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator, Sequence

import numpy as np
import polars as pl
from tqdm import tqdm

from weightedcomplex.config import settings
from weightedcomplex.core.permutations import Permutation
from weightedcomplex.errors import DecompositionError, check_cap
from weightedcomplex.identities.decreasing import S_decreasing_formula
from weightedcomplex.identities.engine import evaluate_identities
from weightedcomplex.identities.recursion import verify_recursion
from weightedcomplex.identities.sums import S_direct
from weightedcomplex.logging_config import get_logger
from weightedcomplex.schemas import SWEEP_CASE_SCHEMA, SWEEP_SUMMARY_SCHEMA, Check, JsonReport
from weightedcomplex.utils import batch_generator, grid_weights, make_rng, random_weights
from weightedcomplex.weighted.complex import (
    build_complex,
    chain_sum,
    classify,
    euler_closed_form,
    euler_sum,
    expected_betti,
    f_vector,
    is_lower_ideal,
    is_pure,
    is_upper_ideal,
    relabel,
)
from weightedcomplex.weighted.cube import chain_to_face, el_labeling_verify, face_to_chain
from weightedcomplex.weighted.shelling import (
    bruhat_shelling_order,
    decomposition,
    lexicographic_facet_order,
    verify_shelling,
)
from weightedcomplex.weighted.weights import WeightVector, format_fraction

logger = get_logger(__name__)

DEFAULT_SUITES = ("main", "recursion", "euler", "decomposition")
SUITES = (*DEFAULT_SUITES, "structural", "shelling", "el", "decreasing")
BATCH_SIZE = 64
SHELLING_SAMPLES = 3

# Settings caps each suite needs n to fit under; "main" skips capped routes itself.
SUITE_CAPS: dict[str, tuple[str, ...]] = {
    "main": (),
    "recursion": ("ordered_partition_cap", "matching_cap"),
    "euler": ("ordered_partition_cap",),
    "decomposition": ("ordered_partition_cap", "shelling_cap"),
    "structural": ("ordered_partition_cap",),
    "shelling": ("ordered_partition_cap", "shelling_cap"),
    "el": ("ordered_partition_cap", "el_labeling_cap", "shelling_cap"),
    "decreasing": ("ordered_partition_cap",),
}

Case = tuple[int, WeightVector]
SuiteOutcome = tuple[int | None, int | None, bool, str]


def _suite_main(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    report = evaluate_identities(weights, ("S", "T", "Tpf", "Srec"))
    s_value = report.s_direct if report.s_direct is not None else report.s_recursive
    failing = [check.name for check in report.checks if not check.passed]
    return s_value, report.t_direct, report.passed, "; ".join(failing)


def _suite_recursion(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    failing = [
        str(check.index)
        for check in (verify_recursion(weights, i) for i in range(1, weights.n))
        if not check.passed
    ]
    detail = f"fails at s_i for i in {','.join(failing)}" if failing else ""
    return None, None, not failing, detail


def _suite_euler(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    value = chain_sum(weights)
    expected = euler_closed_form(weights)
    detail = "" if value == expected else f"euler sum {value} != closed form {expected}"
    return value, expected, value == expected, detail


def _suite_decomposition(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    c = build_complex(weights)
    if c.is_empty:
        return None, None, True, ""
    try:
        certificate = decomposition(c)
    except DecompositionError as exc:
        return None, None, False, str(exc)
    return len(certificate.homology_facets), None, True, ""


def _suite_structural(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    """Upper ideal, purity, faces <-> chains, relabel invariance and the lower ideal of A(λ↓)."""
    c = build_complex(weights)
    problems = []
    if not is_upper_ideal(c):
        problems.append("not an upper ideal")
    if not is_pure(c):
        problems.append("not pure")

    chains = {face_to_chain(sigma, weights) for sigma in c.faces}
    if len(chains) != len(c.faces) or any(chain_to_face(ch, c.n) not in c.faces for ch in chains):
        problems.append("faces and chains do not correspond")

    tau = Permutation(tuple(int(v) + 1 for v in rng.permutation(c.n)))
    moved = build_complex(relabel(tau, weights))
    if relabel(tau, c) != moved or f_vector(moved) != f_vector(c) or euler_sum(moved) != euler_sum(c):
        problems.append(f"relabeling by {tau} changes Σ(λ)")

    descending = WeightVector(tuple(sorted(weights.weights, reverse=True)))
    if not is_lower_ideal(build_complex(descending).facets):
        problems.append(f"A{descending} is not a lower ideal")
    return len(c.facets), None, not problems, "; ".join(problems)


def _suite_shelling(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    """Sampled Bruhat linear extensions shell Σ(λ) with the expected homology facets."""
    if weights.total <= 0:
        return None, None, True, ""
    c = build_complex(weights)
    top = expected_betti(classify(c), c.n)[-1]
    for sample in range(SHELLING_SAMPLES):
        result = verify_shelling(c, bruhat_shelling_order(c, rng))
        if not result.passed:
            return None, top, False, f"sample {sample} fails at index {result.first_bad_index}"
        if len(result.homology_facets) != top:
            return len(result.homology_facets), top, False, f"sample {sample} has wrong homology facets"
    return top, top, True, ""


def _suite_el(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    """EL-labeling of B(λ) and the lexicographic shelling, for distinct entries with Σλ_i > 0."""
    if weights.total <= 0 or not weights.has_distinct_entries():
        return None, None, True, "not applicable"
    verdict = el_labeling_verify(weights)
    if not verdict.passed:
        return None, None, False, f"EL condition fails on {verdict.counterexample}"
    c = build_complex(weights)
    result = verify_shelling(c, lexicographic_facet_order(weights, c.facets))
    detail = "" if result.passed else f"lexicographic order fails at index {result.first_bad_index}"
    return verdict.intervals_checked, None, result.passed, detail


def _suite_decreasing(weights: WeightVector, rng: np.random.Generator) -> SuiteOutcome:
    """The decreasing-λ formula against the face sum, on λ sorted descending."""
    descending = WeightVector(tuple(sorted(weights.weights, reverse=True)))
    formula = S_decreasing_formula(descending)
    direct = S_direct(descending)
    detail = "" if formula == direct else f"formula {formula} != S {direct} on {descending}"
    return direct, formula, formula == direct, detail


SUITE_RUNNERS: dict[str, Callable[[WeightVector, np.random.Generator], SuiteOutcome]] = {
    "main": _suite_main,
    "recursion": _suite_recursion,
    "euler": _suite_euler,
    "decomposition": _suite_decomposition,
    "structural": _suite_structural,
    "shelling": _suite_shelling,
    "el": _suite_el,
    "decreasing": _suite_decreasing,
}


def _run_batch(batch: Sequence[Case], suites: Sequence[str], seed: int) -> list[dict[str, Any]]:
    """Evaluate every suite on one shard of the population."""
    rows = []
    for case, weights in batch:
        for suite in suites:
            rng = make_rng((seed, case, SUITES.index(suite)))
            s_value, t_value, passed, detail = SUITE_RUNNERS[suite](weights, rng)
            rows.append(
                {
                    "case": case,
                    "suite": suite,
                    "n": weights.n,
                    "weights": str(weights),
                    "s_value": s_value,
                    "t_value": t_value,
                    "passed": passed,
                    "detail": detail,
                }
            )
    return rows


@dataclass
class SweepSummary:
    """Collects rows from parallel suite batches."""

    rows: list[dict[str, Any]] = field(default_factory=list)
    errors: list[Exception] = field(default_factory=list)


def _submit_next_batch(
    batch_iter: Iterator[Sequence[Case]],
    executor: ThreadPoolExecutor,
    futures: dict[Future, int],
    suites: Sequence[str],
    seed: int,
) -> bool:
    """Submit the next shard if one is left."""
    try:
        batch = next(batch_iter)
    except StopIteration:
        return False

    futures[executor.submit(_run_batch, batch, suites, seed)] = len(batch)
    return True


def run_cases(
    cases: list[Case], suites: Sequence[str], max_workers: int, seed: int = 0
) -> pl.DataFrame:
    """Run `suites` over `cases` and return one row per (case, suite), sorted by case.

    Each (case, suite) draws from its own generator seeded by (seed, case, suite),
    so the table does not depend on how cases are sharded.

    Raises:
        Exception: The first error raised by a worker, re-raised after all shards finish.
    """
    summary = SweepSummary()
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures: dict[Future, int] = {}
        batch_iter = iter(batch_generator(cases, BATCH_SIZE))

        for _ in range(max_workers):
            if not _submit_next_batch(batch_iter, executor, futures, suites, seed):
                break

        with tqdm(total=len(cases), desc="🧪 Sweeping λ", unit="λ") as progress:
            while futures:
                done, _ = wait(futures.keys(), return_when=FIRST_COMPLETED)
                for future in done:
                    size = futures.pop(future)
                    try:
                        summary.rows.extend(future.result())
                    except Exception as exc:
                        logger.error(f"❌ Sweep batch failed: {exc}")
                        summary.errors.append(exc)
                    progress.update(size)
                    _submit_next_batch(batch_iter, executor, futures, suites, seed)

    if summary.errors:
        raise summary.errors[0]
    return pl.DataFrame(summary.rows, schema=SWEEP_CASE_SCHEMA).sort(["case", "suite"])


def build_population(
    n: int, grid: Sequence[Fraction] | None, random_count: int | None, seed: int
) -> list[Case]:
    """Enumerate the grid, or draw `random_count` seeded random λ."""
    if (grid is None) == (random_count is None):
        raise ValueError("give exactly one of a grid or a random count")
    if grid is not None:
        population = list(grid_weights(n, grid))
    else:
        if random_count is None or random_count < 1:
            raise ValueError("random count must be at least 1")
        rng = make_rng(seed)
        population = [random_weights(n, rng) for _ in range(random_count)]
    return list(enumerate(population))


def summarise(table: pl.DataFrame) -> dict[str, dict[str, int]]:
    """Cases and failures per suite."""
    grouped = (
        table.group_by("suite")
        .agg(
            pl.len().alias("cases"),
            (~pl.col("passed")).sum().alias("failures"),
        )
        .sort("suite")
        .cast(SWEEP_SUMMARY_SCHEMA)
    )
    return {
        row["suite"]: {"cases": int(row["cases"]), "failures": int(row["failures"])}
        for row in grouped.iter_rows(named=True)
    }


def _refusing_cap(suite: str, n: int) -> str | None:
    for cap_name in SUITE_CAPS[suite]:
        cap = getattr(settings, cap_name)
        if n > cap:
            return f"n={n} exceeds {cap_name} {cap}"
    return None


def _value_counts(table: pl.DataFrame) -> dict[str, int]:
    counts = (
        table.filter(pl.col("suite") == "main")
        .group_by("s_value")
        .agg(pl.len().alias("count"))
        .sort("s_value")
    )
    return {str(row["s_value"]): int(row["count"]) for row in counts.iter_rows(named=True)}


def cmd_sweep(
    n: int,
    grid: Sequence[Fraction] | None = None,
    random_count: int | None = None,
    seed: int = 0,
    suites: Sequence[str] = DEFAULT_SUITES,
    workers: int | None = None,
) -> tuple[JsonReport, pl.DataFrame]:
    """Run the invariant suites over a grid or a seeded random population of λ ∈ ℚⁿ.

    Suites whose caps refuse n are dropped and listed under
    ``skipped_suites``. The report holds the per-suite counts and every
    failing λ verbatim; the case table is returned alongside.

    Raises:
        ValueError: On unknown suites, n < 1 or a malformed population request.
        CapExceededError: If n exceeds `settings.max_n`.
    """
    if n < 1:
        raise ValueError("sweeps need n >= 1")
    check_cap("sweep", n, "max_n")
    unknown = [s for s in suites if s not in SUITE_RUNNERS]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; choose from {', '.join(SUITES)}")

    selected: list[str] = []
    skipped: dict[str, str] = {}
    for suite in dict.fromkeys(suites):
        reason = _refusing_cap(suite, n)
        if reason is None:
            selected.append(suite)
        else:
            skipped[suite] = reason
            logger.warning(f"⏭️  Suite {suite} skipped: {reason}")

    cases = build_population(n, grid, random_count, seed)
    logger.info(f"🧪 Sweeping {len(cases)} λ at n={n} over suites {selected}")
    table = run_cases(cases, selected, workers or settings.sweep_workers, seed)

    per_suite = summarise(table)
    failures = table.filter(~pl.col("passed")).select(["case", "suite", "weights", "detail"])
    report = JsonReport(
        command="sweep",
        inputs={
            "n": n,
            "grid": [format_fraction(v) for v in grid] if grid is not None else None,
            "random": random_count,
            "seed": seed,
            "suites": list(dict.fromkeys(suites)),
        },
        results={
            "cases": len(cases),
            "suites": per_suite,
            "s_value_counts": _value_counts(table),
            "failures": failures.to_dicts(),
            "skipped_suites": skipped,
        },
        checks=[
            Check(
                name=f"{suite}: failing cases",
                expected=0,
                actual=counts["failures"],
                passed=counts["failures"] == 0,
            )
            for suite, counts in per_suite.items()
        ],
    )
    if report.passed:
        logger.info(f"✅ Sweep finished: {len(cases)} cases, no failures")
    else:
        logger.warning(f"⚠️  Sweep finished with {failures.height} failing rows")
    return report, table
