"""Tests for report rendering and the CLI parsers."""

import json

import pytest

from weightedcomplex.cli.serialization import (
    complex_from_payload,
    complex_to_payload,
    dump_report,
    error_report,
    load_order_file,
    parse_caps,
    parse_order,
    parse_weights,
    render_text,
)
from weightedcomplex.errors import CapExceededError, ParseError
from weightedcomplex.schemas import Check, JsonReport


def test_payload_survives_json(make_complex, figure_weights) -> None:
    c = make_complex(*figure_weights.weights)
    payload = json.loads(json.dumps(complex_to_payload(c)))
    rebuilt = complex_from_payload(payload)

    assert rebuilt.weights == c.weights
    assert rebuilt.faces == c.faces
    assert rebuilt.facets == c.facets
    assert payload["facets"][0] == [1, 2, 3, 4]


@pytest.mark.parametrize(
    "payload",
    [
        {"faces": [], "facets": []},
        {"weights": [1, 1], "faces": [{"blocks": [[1], [1]]}], "facets": []},
        {"weights": [1, 1], "faces": [], "facets": [[1, 1]]},
    ],
)
def test_malformed_payload(payload) -> None:
    with pytest.raises(ParseError):
        complex_from_payload(payload)


def test_parse_weights_rejects_empty() -> None:
    with pytest.raises(ParseError):
        parse_weights("")


def test_parse_caps() -> None:
    assert parse_caps(["homology_cap=4", " shelling_cap=3"]) == {"homology_cap": 4, "shelling_cap": 3}


@pytest.mark.parametrize("assignment", ["homology_cap", "nope=3", "homology_cap=four"])
def test_parse_caps_errors(assignment) -> None:
    with pytest.raises(ParseError):
        parse_caps([assignment])


@pytest.mark.parametrize(
    "payload",
    [{}, [], [[1, 2, 3], [1, 2]], [[1, "2", 3]], [[1, 1, 3]]],
)
def test_parse_order_errors(payload) -> None:
    with pytest.raises(ParseError):
        parse_order(payload, 3)


def test_load_order_file(tmp_path) -> None:
    path = tmp_path / "order.json"
    path.write_text("[[2, 1], [1, 2]]")
    assert [list(p.entries) for p in load_order_file(str(path), 2)] == [[2, 1], [1, 2]]


def test_load_order_file_errors(tmp_path) -> None:
    with pytest.raises(ParseError, match="cannot read"):
        load_order_file(str(tmp_path / "missing.json"), 2)
    broken = tmp_path / "broken.json"
    broken.write_text("[[1, 2]")
    with pytest.raises(ParseError, match="not valid JSON"):
        load_order_file(str(broken), 2)


def test_dump_report_uses_pass_alias() -> None:
    report = JsonReport(
        command="compute",
        inputs={"lambda": [1]},
        results={"S": -1},
        checks=[Check(name="S == (-1)^n T_direct", expected=-1, actual=-1, passed=True)],
    )
    payload = json.loads(dump_report(report))
    assert payload["checks"] == [
        {"name": "S == (-1)^n T_direct", "expected": -1, "actual": -1, "pass": True}
    ]
    assert list(payload) == ["schema_version", "command", "inputs", "results", "checks"]


def test_error_report_and_text() -> None:
    report = error_report("complex", CapExceededError("face enumeration", 12, 10))
    assert report.error.type == "CapExceededError"
    assert "n=12" in report.error.message
    assert render_text(report).startswith("❌ complex: CapExceededError")


def test_render_text_marks_failures() -> None:
    report = JsonReport(
        command="sweep",
        inputs={"n": 3},
        results={"cases": 2},
        checks=[Check(name="main: failing cases", expected=0, actual=1, passed=False)],
    )
    text = render_text(report)
    header = next(line for line in text.splitlines() if "sweep inputs" in line)
    assert "─" in header
    assert "main: failing cases" in text
    assert "❌" in text
