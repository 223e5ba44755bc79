"""
Unit tests for trajectory classification
"""
import numpy
import pytest

from cyclosc.ddesim.classification import (
    classify,
    create_classification_controls,
)
from cyclosc.ddesim.trajectory_model import (
    CONVERGED,
    OSCILLATING,
    UNDETERMINED,
    Trajectory,
)
from cyclosc.errors import DomainError


def _trajectory(level, time, timescale=1.0):
    p_levels = numpy.column_stack([level, level])
    return Trajectory.constructor(
        time, p_levels, p_levels, time[1] - time[0], timescale
    )


TIME = numpy.linspace(0.0, 200.0, 20001)


@pytest.mark.parametrize(
    "level, expected",
    [
        (numpy.full(TIME.size, 2.0), CONVERGED),
        (1.0 + 0.5 * numpy.sin(2.0 * numpy.pi * TIME / 5.0), OSCILLATING),
        (1.0 + numpy.exp(-0.05 * TIME) * numpy.sin(TIME), OSCILLATING),
        (
            5.0 + (0.3 + 2.0 * numpy.exp(-0.02 * TIME)) * numpy.sin(TIME),
            OSCILLATING,
        ),
        (1.0 + numpy.exp(-0.1 * TIME), CONVERGED),
        (1.0 + numpy.exp(-0.01 * TIME), UNDETERMINED),
    ],
)
def test_classify(level, expected):
    """Flat, periodic, damped, shrinking and monotone levels"""
    traj = _trajectory(level, TIME)
    assert classify(traj) == expected
    assert traj.attrs["classification"] == expected


def test_flatness_uses_last_quarter():
    """Ringing that stops inside the last quarter is not convergence"""
    ringing = 1.0 + 0.5 * numpy.sin(2.0 * numpy.pi * TIME / 5.0)
    level = numpy.where(TIME < 160.0, ringing, 1.0)
    assert classify(_trajectory(level, TIME)) == OSCILLATING
    level = numpy.where(TIME < 150.0, ringing, 1.0)
    assert classify(_trajectory(level, TIME)) == CONVERGED


def test_envelope_decay_is_opt_in():
    """Damped ringing counts as convergence only when asked for"""
    level = 1.0 + numpy.exp(-0.05 * TIME) * numpy.sin(TIME)
    controls = create_classification_controls()
    assert controls["transient_fraction"] == 0.5
    assert controls["decay_factor"] is None
    controls["decay_factor"] = 0.75
    assert classify(_trajectory(level, TIME), controls) == CONVERGED
    sustained = 1.0 + 0.5 * numpy.sin(TIME)
    assert classify(_trajectory(sustained, TIME), controls) == OSCILLATING


def test_classify_period_and_amplitude():
    """Period and amplitude of a clean oscillation are recorded"""
    level = 1.0 + 0.5 * numpy.sin(2.0 * numpy.pi * TIME / 5.0)
    traj = _trajectory(level, TIME)
    classify(traj)
    numpy.testing.assert_allclose(traj.attrs["period"], 5.0, rtol=1e-3)
    numpy.testing.assert_allclose(traj.attrs["amplitude"], 1.0, rtol=1e-3)


def test_irregular_peaks_undetermined():
    """Peaks at irregular intervals are not called oscillations"""
    rng = numpy.random.default_rng(1805550721)
    phase = numpy.cumsum(rng.uniform(0.0, 0.05, TIME.size))
    level = 1.0 + 0.5 * numpy.sin(phase) + 0.3 * numpy.sin(7.3 * phase**1.3)
    controls = dict(create_classification_controls(), cv_tol=0.01)
    assert classify(_trajectory(level, TIME), controls) == UNDETERMINED


def test_classify_short_trajectory():
    """Trajectories shorter than twenty timescales are refused"""
    with pytest.raises(DomainError):
        classify(_trajectory(numpy.ones(TIME.size), TIME, timescale=50.0))
