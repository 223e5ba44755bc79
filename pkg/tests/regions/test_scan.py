"""
Unit tests for parameter sweeps and boundary tracing
"""
import math

import numpy
import pytest

from cyclosc.ddesim.trajectory_model import UNDETERMINED
from cyclosc.linearization.reduction import gain_from_ratio
from cyclosc.regions.axes import apply_axis, parse_axis
from cyclosc.regions.scan import (
    THREADS_VARIABLE,
    _chain_labels,
    evaluate_cell,
    scan,
    sweep_workers,
    trace_boundary,
)
from cyclosc.stability.analytic import critical_gain
from cyclosc.stability.verdict import LOCALLY_STABLE, OSCILLATIONS


@pytest.fixture(scope="module", name="delay_grid")
def delay_grid_fixture(example7):
    """Normalised delay against Hill coefficient for the seven-gene ring"""
    return scan(
        example7,
        parse_axis("tau:0:2:5"),
        parse_axis("nu:2.6:3.6:2"),
        workers=1,
    )


def test_scan_shape_and_values(delay_grid, example7):
    """Cells match single evaluations"""
    assert delay_grid.region_acc.shape == (2, 5)
    assert delay_grid.region_acc.x_axis["parameter"] == "tau"
    assert delay_grid.attrs["template"] == example7.to_json(indent=None)
    outcome, gain, critical, margin = evaluate_cell(
        example7, [("tau", 1.0), ("nu", 2.6)]
    )
    assert delay_grid["outcome"].values[0, 2] == outcome == OSCILLATIONS
    numpy.testing.assert_allclose(delay_grid["L"].values[0, 2], gain)
    numpy.testing.assert_allclose(delay_grid["L_bar"].values[0, 2], critical)
    numpy.testing.assert_allclose(delay_grid["margin"].values[0, 2], margin)
    assert delay_grid["outcome"].values[0, 0] == LOCALLY_STABLE


def test_scan_monotone(delay_grid):
    """Margins grow with the delay and with the Hill coefficient"""
    margin = delay_grid["margin"].values
    assert numpy.all(numpy.diff(margin, axis=1) > 0.0)
    assert numpy.all(numpy.diff(margin, axis=0) > 0.0)
    gain = delay_grid["L"].values
    numpy.testing.assert_allclose(gain, gain[:, :1] * numpy.ones((1, 5)))


def test_scan_dataframe(delay_grid):
    """Cell table is ordered row by row"""
    frame = delay_grid.region_acc.to_dataframe()
    assert list(frame.columns) == ["x", "y", "outcome", "L", "L_bar", "margin"]
    assert len(frame) == 10
    numpy.testing.assert_allclose(frame["x"][:5], [0.0, 0.5, 1.0, 1.5, 2.0])
    numpy.testing.assert_allclose(frame["y"][:5], 2.6)
    counts = [
        delay_grid.region_acc.count(kind)
        for kind in (OSCILLATIONS, LOCALLY_STABLE)
    ]
    assert sum(counts) == 10


def test_trace_boundary_delay(delay_grid, example7):
    """Refined boundary points sit on the zero margin"""
    grid = delay_grid.copy()
    frame = trace_boundary(grid)
    assert list(frame.columns) == ["segment", "x", "y"]
    first_row = frame[frame["y"] == 2.6]
    assert len(first_row) == 1
    tau_tilde = float(first_row["x"].iloc[0])
    assert 0.0 < tau_tilde < 1.0
    margin = evaluate_cell(example7, [("tau", tau_tilde), ("nu", 2.6)])[3]
    assert abs(margin) < 1e-8
    assert grid["boundary_x"].size == len(frame)


def test_trace_boundary_hes7(hes7_wild):
    """Protein half-life boundary of the Hes7 oscillator lies near 22"""
    grid = scan(
        hes7_wild,
        parse_axis("t_p:10:40:7"),
        parse_axis("t_r:3:6:2"),
        workers=1,
    )
    row = grid["outcome"].values[0]
    assert row[2] == OSCILLATIONS
    assert row[4] == LOCALLY_STABLE
    frame = trace_boundary(grid, hes7_wild)
    crossing = frame[(frame["y"] == 3.0) & frame["x"].between(20.0, 30.0)]
    assert len(crossing) == 1
    numpy.testing.assert_allclose(crossing["x"].iloc[0], 22.0, atol=2.0)


def test_repressilator_alpha_sweep(repressilator):
    """Oscillating cells are closed towards larger alpha"""
    grid = scan(
        repressilator,
        parse_axis("alpha:1:1000:4:log"),
        parse_axis("gamma_inv:1:10:3"),
        workers=1,
    )
    oscillating = grid["outcome"].values == OSCILLATIONS
    assert not oscillating[:, 0].any()
    for row in oscillating:
        first = numpy.argmax(row) if row.any() else row.size
        assert row[first:].all()
    outcome = evaluate_cell(
        repressilator, [("alpha", 624.0), ("gamma_inv", 5.0)]
    )[0]
    assert outcome == OSCILLATIONS


def test_empty_boundary(counterexample):
    """A grid without sign changes has no boundary"""
    grid = scan(
        counterexample,
        parse_axis("alpha:0.1:0.5:3"),
        parse_axis("nu:1:1.5:2"),
        workers=1,
    )
    assert grid.region_acc.count(LOCALLY_STABLE) == 6
    frame = trace_boundary(grid)
    assert frame.empty
    assert list(frame.columns) == ["segment", "x", "y"]


def test_failed_cells_are_undetermined(counterexample):
    """Invalid parameter values do not abort the sweep"""
    outcome, gain, _, margin = evaluate_cell(counterexample, [("alpha", -1.0)])
    assert outcome == UNDETERMINED
    assert math.isnan(gain) and math.isnan(margin)


def test_parallel_scan_matches_serial(counterexample):
    """Worker processes give the same grid as a serial run"""
    axes = parse_axis("nu:1.5:3.5:3"), parse_axis("tau:0:2:4")
    serial = scan(counterexample, *axes, workers=1)
    parallel = scan(counterexample, *axes, workers=2)
    numpy.testing.assert_array_equal(
        serial["margin"].values, parallel["margin"].values
    )
    assert (serial["outcome"].values == parallel["outcome"].values).all()


def test_sweep_workers(monkeypatch):
    """Explicit count, environment, then CPU count"""
    assert sweep_workers(0) == 1
    monkeypatch.setenv(THREADS_VARIABLE, "3")
    assert sweep_workers() == 3
    monkeypatch.delenv(THREADS_VARIABLE)
    assert sweep_workers() >= 1


def test_closed_form_regions_monotone_and_nested():
    """Oscillations never switch off as nu, R or the delay grow"""
    nu_values = numpy.linspace(1.0, 8.0, 100)
    ratio_values = numpy.linspace(0.5, 8.0, 100)
    gain = numpy.array(
        [
            [gain_from_ratio(nu, ratio) for nu in nu_values]
            for ratio in ratio_values
        ]
    )
    previous = numpy.zeros(gain.shape, dtype=bool)
    for tau_tilde in (0.0, 0.5, 1.0, 2.0):
        oscillating = gain > critical_gain(7, 0.8, tau_tilde)
        assert not (oscillating[:-1, :] & ~oscillating[1:, :]).any()
        assert not (oscillating[:, :-1] & ~oscillating[:, 1:]).any()
        assert numpy.all(oscillating[previous])
        previous = oscillating
    assert previous.any() and not previous.all()


def test_scanned_regions_nested(example7):
    """Cells oscillating at one delay still oscillate at a larger one"""
    previous = None
    for tau_tilde in (0.0, 0.5, 1.0):
        template = apply_axis(example7, "tau", tau_tilde)
        grid = scan(
            template,
            parse_axis("nu:1.5:4:12"),
            parse_axis("R:0.8:2:12"),
            workers=1,
        )
        oscillating = grid["outcome"].values == OSCILLATIONS
        assert not (oscillating[:, :-1] & ~oscillating[:, 1:]).any()
        assert not (oscillating[:-1, :] & ~oscillating[1:, :]).any()
        if previous is not None:
            assert numpy.all(oscillating[previous])
        previous = oscillating
    assert previous.sum() > 0


def test_chain_labels():
    """Points sharing a grid square end up in one segment"""
    points = [
        (0.0, 0.0, 0.5, 0.0, {(0, 0), (1, 0)}),
        (0.0, 0.0, 0.0, 1.5, {(1, 0), (1, 1)}),
        (0.0, 0.0, 5.5, 7.0, {(6, 5), (7, 5)}),
        (0.0, 0.0, 1.0, 1.5, {(1, 1), (1, 2)}),
    ]
    labels = _chain_labels(points)
    assert labels[0] == labels[1] == labels[3]
    assert labels[2] != labels[0]
    assert _chain_labels([]).size == 0
