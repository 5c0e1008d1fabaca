"""Tests for the multi-route identity engine."""

import pytest

from weightedcomplex.config import settings
from weightedcomplex.identities.engine import ROUTES, evaluate_identities


def test_all_routes_agree_on_figure(figure_weights) -> None:
    report = evaluate_identities(figure_weights)
    assert report.passed
    assert report.s_direct == 0
    assert report.t_direct == 0
    assert report.t_pfaffian == 0
    assert report.s_decreasing == 0
    assert report.skipped == {}


def test_sphere_values(make_weights) -> None:
    report = evaluate_identities(make_weights(1, 1, 1))
    assert (report.s_direct, report.t_direct, report.t_pfaffian) == (-1, 1, 1)
    assert (report.s_recursive, report.t_recursive) == (-1, 1)
    assert report.passed


def test_decreasing_route_skipped_for_unsorted_weights(make_weights) -> None:
    report = evaluate_identities(make_weights(-1, 3))
    assert report.s_decreasing is None
    assert "Sdec" in report.skipped
    assert report.passed


def test_single_route_has_no_checks(make_weights) -> None:
    report = evaluate_identities(make_weights(0), ["T"])
    assert report.t_direct == 0
    assert report.checks == []
    assert report.passed


def test_capped_routes_are_skipped(monkeypatch, make_weights) -> None:
    """The recursive value anchors the comparison when the direct sum is capped."""
    monkeypatch.setattr(settings, "ordered_partition_cap", 3)
    report = evaluate_identities(make_weights(2, 1, -1, -1), ROUTES)
    assert report.s_direct is None
    assert {"S", "Sdec"} <= set(report.skipped)
    assert report.checks
    assert report.passed


def test_unknown_route(make_weights) -> None:
    with pytest.raises(ValueError):
        evaluate_identities(make_weights(1), ["X"])
