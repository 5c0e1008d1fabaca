"""End-to-end tests for the weightedcomplex command line."""

import json

import pytest

from weightedcomplex.cli import main as cli_main
from weightedcomplex.config import settings
from weightedcomplex.errors import DecompositionError
from weightedcomplex.storage import read_table


def _run(capsys, *argv: str) -> tuple[int, dict]:
    code = cli_main.run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_compute_single_route(capsys) -> None:
    """`compute --lambda 1,1,1 S` gives S = -1."""
    code, report = _run(capsys, "compute", "--lambda", "1,1,1", "S")
    assert code == 0
    assert report["schema_version"] == "1.0"
    assert report["results"]["S"] == -1
    assert report["inputs"]["lambda"] == [1, 1, 1]


def test_compute_T_of_zero(capsys) -> None:  # noqa: N802
    code, report = _run(capsys, "compute", "--lambda", "0", "T")
    assert code == 0
    assert report["results"]["T"] == 0


def test_compute_all_routes_on_figure(capsys) -> None:
    code, report = _run(capsys, "compute", "--lambda", "5,1,-2,-3", "--all")
    assert code == 0
    for route in ("S", "T", "Tpf", "Srec", "Trec", "Sdec"):
        assert report["results"][route] == 0
    assert all(check["pass"] for check in report["checks"])


def test_compute_accepts_leading_negative_weight(capsys) -> None:
    code, report = _run(capsys, "compute", "--lambda", "-1,3", "S", "T")
    assert code == 0
    assert report["results"] == {"S": 0, "T": 0, "skipped": {}}


def test_compute_fractions(capsys) -> None:
    code, report = _run(capsys, "compute", "--lambda", "1/2,-1/3", "--all")
    assert code == 0
    assert report["inputs"]["lambda"] == ["1/2", "-1/3"]


@pytest.mark.parametrize(
    "argv,error_type",
    [
        (("compute", "--lambda", "1.5", "S"), "ParseError"),
        (("compute", "--lambda", "1,1", "X"), "ValueError"),
        (("compute",), "UsageError"),
        ((), "UsageError"),
        (("compute", "--lambda", "1", "--cap", "bogus=3"), "ParseError"),
        (("compute", "--lambda", "1", "--cap", "homology_cap=99"), "ValidationError"),
        (("complex", "--lambda", "1,1,1", "--cap", "ordered_partition_cap=2"), "CapExceededError"),
        (("shell", "--lambda", "1,-2"), "ValueError"),
        (("shell", "--lambda", "1,1", "--order-source", "file"), "ValueError"),
        (("sweep", "--n", "2", "--random", "0"), "ValueError"),
    ],
)
def test_errors_exit_two_with_error_object(capsys, argv, error_type) -> None:
    code, report = _run(capsys, *argv)
    assert code == 2
    assert report["error"]["type"] == error_type
    assert report["error"]["message"]


def test_cap_overrides_are_restored(capsys) -> None:
    before = settings.ordered_partition_cap
    code, _ = _run(capsys, "complex", "--lambda", "1,1", "--cap", "ordered_partition_cap=3")
    assert code == 0
    assert settings.ordered_partition_cap == before


def test_complex_export_on_figure(capsys) -> None:
    code, report = _run(capsys, "complex", "--lambda", "5,1,-2,-3", "--export")
    results = report["results"]
    assert code == 0
    assert results["f_vector"] == [1, 7, 12, 6]
    assert results["classification"] == "Ball(2)"
    assert results["euler_sum"] == 0
    assert results["reduced_betti_gf2"] == [0, 0, 0, 0]
    assert results["el_labeling"]["passed"] is True
    assert len(results["faces"]) == 26
    assert {"blocks": [[1], [4], [2, 3]], "label": "1-4-23"} in results["faces"]


def test_complex_sphere(capsys) -> None:
    code, report = _run(capsys, "complex", "--lambda", "1,1,1")
    assert code == 0
    assert report["results"]["classification"] == "Sphere(1)"
    assert report["results"]["facet_count"] == 6
    assert report["results"]["el_labeling"]["status"] == "not applicable: repeated entries"


def test_complex_empty(capsys) -> None:
    code, report = _run(capsys, "complex", "--lambda", "-1,-1", "--export")
    assert code == 0
    assert report["results"]["classification"] == "Empty"
    assert report["results"]["faces"] == []


def test_shell_linear_extension(capsys) -> None:
    code, report = _run(capsys, "shell", "--lambda", "3,1,-1", "--samples", "3", "--seed", "5")
    assert code == 0
    assert len(report["results"]["orders"]) == 3
    assert all(entry["passed"] for entry in report["results"]["orders"])


def test_shell_lexicographic(capsys) -> None:
    code, report = _run(capsys, "shell", "--lambda", "3,2,-1", "--order-source", "lex-el")
    assert code == 0
    assert report["results"]["el_labeling"]["passed"] is True


def test_shell_decomposition_order(capsys) -> None:
    code, report = _run(capsys, "shell", "--lambda", "-1,2,1", "--order-source", "decomposition")
    assert code == 0
    assert report["results"]["orders"][0]["homology_facets"] == []


def test_shell_decomposition_that_does_not_tile_exits_one(capsys, monkeypatch) -> None:
    def overlapping(c):
        raise DecompositionError("intervals overlap at ['1-2-3']")

    monkeypatch.setattr("weightedcomplex.cli.commands.decomposition", overlapping)
    code, report = _run(capsys, "shell", "--lambda", "1,1,1", "--order-source", "decomposition")
    assert code == 1
    assert report["error"]["type"] == "DecompositionError"
    assert "overlap" in report["error"]["message"]



def test_shell_adversarial_file(capsys, tmp_path) -> None:
    """Opposite edges of the hexagon fail at index 1 with exit code 1."""
    order_file = tmp_path / "order.json"
    order_file.write_text(json.dumps([[1, 2, 3], [3, 2, 1], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2]]))
    code, report = _run(
        capsys, "shell", "--lambda", "1,1,1", "--order-source", "file", "--order-file", str(order_file)
    )
    assert code == 1
    assert report["results"]["orders"][0]["first_bad_index"] == 1


def test_shell_file_with_wrong_facets(capsys, tmp_path) -> None:
    order_file = tmp_path / "order.json"
    order_file.write_text(json.dumps([[1, 2, 3]]))
    code, report = _run(
        capsys, "shell", "--lambda", "1,1,1", "--order-source", "file", "--order-file", str(order_file)
    )
    assert code == 2
    assert report["error"]["type"] == "ValueError"


def test_sweep_single_case(capsys) -> None:
    """`sweep --n 3 --grid 1` is one all-positive case with S = -1."""
    code, report = _run(capsys, "sweep", "--n", "3", "--grid", "1")
    assert code == 0
    assert report["results"]["cases"] == 1
    assert report["results"]["s_value_counts"] == {"-1": 1}


def test_sweep_grid_with_negative_values(capsys) -> None:
    code, report = _run(capsys, "sweep", "--n", "3", "--grid", "-2,-1,1,2", "--workers", "2")
    assert code == 0
    assert report["results"]["cases"] == 64
    assert report["results"]["failures"] == []
    assert set(report["results"]["suites"]) == {"decomposition", "euler", "main", "recursion"}


def test_sweep_above_face_cap_runs_main_suite_only(capsys) -> None:
    code, report = _run(capsys, "sweep", "--n", "11", "--random", "2", "--seed", "5")
    assert code == 0
    assert report["results"]["cases"] == 2
    assert set(report["results"]["skipped_suites"]) == {"decomposition", "euler", "recursion"}
    assert list(report["results"]["suites"]) == ["main"]



def test_sweep_is_reproducible(capsys) -> None:
    argv = ("sweep", "--n", "4", "--random", "25", "--seed", "42")
    cli_main.run(list(argv))
    first = capsys.readouterr().out
    cli_main.run([*argv, "--workers", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_sweep_table_out(capsys, tmp_path) -> None:
    table_path = tmp_path / "cases.parquet"
    code, _ = _run(
        capsys, "sweep", "--n", "2", "--grid", "-1,1", "--suite", "main", "--table-out", str(table_path)
    )
    assert code == 0
    table = read_table(str(table_path))
    assert table.height == 4
    assert table["passed"].all()


def test_text_format_and_out_file(capsys, tmp_path) -> None:
    out = tmp_path / "reports" / "compute.txt"
    code = cli_main.run(["compute", "--lambda", "1,1,1", "--format", "text", "--out", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    text = out.read_text()
    assert "checks" in text
    assert "S == (-1)^n T_direct" in text


def test_join_negative_values() -> None:
    assert cli_main._join_negative_values(["compute", "--lambda", "-1,2", "S"]) == [
        "compute",
        "--lambda=-1,2",
        "S",
    ]
    assert cli_main._join_negative_values(["--grid"]) == ["--grid"]
