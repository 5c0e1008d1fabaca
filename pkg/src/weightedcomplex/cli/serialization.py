"""JSON and text rendering of complexes, certificates and reports. 📝

Every number leaves this module as an int or a "p/q" string.
"""

import io
import json
from pathlib import Path
from typing import Any, Iterable

from rich.console import Console
from rich.table import Table

from weightedcomplex.config import CAP_FIELDS
from weightedcomplex.core.partitions import OrderedPartition
from weightedcomplex.core.permutations import Permutation
from weightedcomplex.errors import ParseError
from weightedcomplex.identities.models import IdentityCheck
from weightedcomplex.schemas import Check, ErrorDetail, ErrorReport, JsonReport
from weightedcomplex.weighted.complex import WeightedComplex
from weightedcomplex.weighted.weights import WeightVector


def parse_weights(text: str) -> WeightVector:
    """Parse --lambda; at least one entry required."""
    weights = WeightVector.parse(text)
    if weights.n == 0:
        raise ParseError("λ needs at least one entry")
    return weights


def parse_caps(assignments: Iterable[str]) -> dict[str, int]:
    """Parse repeated ``--cap KEY=VALUE`` options.

    Raises:
        ParseError: On unknown keys, missing '=' or non-integer values.
    """
    caps: dict[str, int] = {}
    for assignment in assignments:
        key, sep, value = assignment.partition("=")
        key = key.strip()
        if not sep:
            raise ParseError(f"cap override {assignment!r} must look like KEY=VALUE")
        if key not in CAP_FIELDS:
            raise ParseError(f"unknown cap {key!r}; choose from {', '.join(CAP_FIELDS)}")
        try:
            caps[key] = int(value)
        except ValueError as exc:
            raise ParseError(f"cap {key} needs an integer value, got {value!r}") from exc
    return caps


def parse_order(payload: Any, n: int) -> list[Permutation]:
    """A facet order given as a JSON array of one-line permutations.

    Raises:
        ParseError: If the payload is not a list of permutations of [n].
    """
    if not isinstance(payload, list) or not payload:
        raise ParseError("order must be a nonempty JSON array of permutations")
    order = []
    for entry in payload:
        if not isinstance(entry, list) or not all(isinstance(v, int) for v in entry):
            raise ParseError(f"order entry {entry!r} is not an array of integers")
        if len(entry) != n:
            raise ParseError(f"order entry {entry!r} has length {len(entry)}, expected {n}")
        try:
            order.append(Permutation(tuple(entry)))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return order


def load_order_file(path: str, n: int) -> list[Permutation]:
    """Read and parse an order file.

    Raises:
        ParseError: If the file is missing, not JSON, or not a list of permutations.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read order file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"order file {path} is not valid JSON: {exc}") from exc
    return parse_order(payload, n)


def partition_to_json(sigma: OrderedPartition) -> dict[str, Any]:
    return {"blocks": sigma.as_lists(), "label": sigma.label()}


def complex_to_payload(c: WeightedComplex) -> dict[str, Any]:
    """Export Σ(λ) with explicit block lists, faces sorted by (blocks, contents)."""
    return {
        "weights": c.weights.to_json(),
        "faces": [partition_to_json(sigma) for sigma in c.sorted_faces()],
        "facets": [list(tau.entries) for tau in c.sorted_facets()],
    }


def complex_from_payload(payload: dict[str, Any]) -> WeightedComplex:
    """Inverse of `complex_to_payload`.

    Raises:
        ParseError: On malformed weights, faces or facets.
    """
    try:
        weights = WeightVector.of(*payload["weights"])
        n = weights.n
        faces = frozenset(
            OrderedPartition.from_blocks(face["blocks"], n) for face in payload["faces"]
        )
        facets = frozenset(Permutation(tuple(f)) for f in payload["facets"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed complex payload: {exc}") from exc
    return WeightedComplex(weights, faces, facets)


def identity_checks(checks: Iterable[IdentityCheck]) -> list[Check]:
    return [
        Check(name=c.name, expected=c.lhs, actual=c.rhs, passed=c.passed) for c in checks
    ]


def dump_report(report: JsonReport | ErrorReport) -> str:
    """Deterministic JSON text (no timestamps, stable key order)."""
    return report.model_dump_json(indent=2, by_alias=True)


def error_report(command: str, exc: Exception) -> ErrorReport:
    return ErrorReport(
        command=command, error=ErrorDetail(type=type(exc).__name__, message=str(exc))
    )


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)


def render_text(report: JsonReport | ErrorReport) -> str:
    """Human-readable rendering with rich tables."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=120, color_system=None)
    if isinstance(report, ErrorReport):
        console.print(f"❌ {report.command}: {report.error.type}: {report.error.message}")
        return buffer.getvalue()

    console.rule(f"{report.command} inputs")
    inputs = Table(show_header=False)
    for key, value in report.inputs.items():
        inputs.add_row(key, _cell(value))
    console.print(inputs)

    console.rule("results")
    results = Table(show_header=False)
    for key, value in report.results.items():
        results.add_row(key, _cell(value))
    console.print(results)

    if report.checks:
        console.rule("checks")
        checks = Table()
        checks.add_column("name")
        checks.add_column("expected")
        checks.add_column("actual")
        checks.add_column("pass")
        for check in report.checks:
            checks.add_row(
                check.name,
                _cell(check.expected),
                _cell(check.actual),
                "✅" if check.passed else "❌",
            )
        console.print(checks)
    return buffer.getvalue()
