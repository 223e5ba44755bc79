"""
Long-run behaviour of a simulated trajectory.

Only the protein level of gene 1 is inspected, and the first half of the
trajectory is discarded as transient. The trajectory is Converged when
its last quarter is flat, Oscillating when it shows regular peaks of
non-negligible amplitude, and Undetermined otherwise. Periodic and
homoclinic orbits are not told apart.
"""

__all__ = ["classify", "create_classification_controls"]

import logging

import numpy
from scipy import signal

from cyclosc.ddesim.trajectory_model import (
    CONVERGED,
    OSCILLATING,
    UNDETERMINED,
)
from cyclosc.errors import DomainError

log = logging.getLogger("cyclosc-logger")


def create_classification_controls():
    """
    Create a dictionary containing default classification controls.

    The fields are

        transient_fraction: leading share of the trajectory discarded
        flat_fraction: trailing share whose total variation decides
            convergence
        variation_tol: total variation of the trailing share, relative
            to the mean level, below which the trajectory is flat
        amplitude_tol: smallest peak-to-trough amplitude, relative to
            the mean level, of an oscillation
        cv_tol: largest coefficient of variation of peak intervals
        min_peaks: fewest maxima of an oscillation
        min_timescales: shortest trajectory, in network timescales
        decay_factor: None, or the envelope shrink over the analysis
            window that also counts as convergence (opt-in, for damped
            ringing on short horizons)

    :return: dictionary
    """
    controls = {
        "transient_fraction": 0.5,
        "flat_fraction": 0.25,
        "variation_tol": 1e-6,
        "amplitude_tol": 1e-3,
        "cv_tol": 0.2,
        "min_peaks": 3,
        "min_timescales": 20.0,
        "decay_factor": None,
    }
    return controls


def _envelope_decays(time, level, extrema, decay_factor):
    """Log-linear fit of the extremum deviations from the mean level"""
    deviation = numpy.abs(level[extrema] - numpy.mean(level))
    if extrema.size < 2 or numpy.any(deviation <= 0.0):
        return False
    slope = numpy.polyfit(time[extrema], numpy.log(deviation), 1)[0]
    span = time[-1] - time[0]
    return slope * span <= numpy.log(decay_factor)


def classify(traj, controls=None):  # pylint: disable=too-many-locals
    """
    Classify a trajectory and record the result in its attributes.

    Attributes classification, period (mean interval between maxima, NaN
    unless Oscillating) and amplitude (peak to trough over the analysis
    window) are set on traj.

    :param traj: Trajectory
    :param controls: classification controls, see
                     create_classification_controls
    :return: "Oscillating", "Converged" or "Undetermined"
    """
    if controls is None:
        controls = create_classification_controls()

    time = traj["time"].values
    duration = time[-1] - time[0]
    timescale = traj.attrs["timescale"]
    if duration < controls["min_timescales"] * timescale:
        raise DomainError(
            f"classify: Trajectory covers {duration:.4g}, need "
            f"{controls['min_timescales']} x {timescale:.4g}"
        )

    keep = time >= time[0] + controls["transient_fraction"] * duration
    window_t = time[keep]
    level = traj["p"].values[keep, 0]
    mean = max(abs(float(numpy.mean(level))), numpy.finfo(float).tiny)

    tail = traj["p"].values[
        time >= time[-1] - controls["flat_fraction"] * duration, 0
    ]
    variation = float(numpy.sum(numpy.abs(numpy.diff(tail))))

    maxima, _ = signal.find_peaks(level, prominence=1e-9 * mean)
    minima, _ = signal.find_peaks(-level, prominence=1e-9 * mean)
    extrema = numpy.sort(numpy.concatenate([maxima, minima]))
    amplitude = float(level.max() - level.min())

    period = numpy.nan
    outcome = UNDETERMINED
    if variation <= controls["variation_tol"] * mean:
        outcome = CONVERGED
    elif controls["decay_factor"] is not None and _envelope_decays(
        window_t, level, extrema, controls["decay_factor"]
    ):
        outcome = CONVERGED
    elif (
        maxima.size >= controls["min_peaks"]
        and amplitude >= controls["amplitude_tol"] * mean
    ):
        intervals = numpy.diff(window_t[maxima])
        spread = numpy.std(intervals) / numpy.mean(intervals)
        if spread <= controls["cv_tol"]:
            outcome = OSCILLATING
            period = float(numpy.mean(intervals))

    traj.attrs["classification"] = outcome
    traj.attrs["period"] = period
    traj.attrs["amplitude"] = amplitude
    log.info(
        "classify: %s (variation %.3g, amplitude %.3g, period %.4g, "
        "%d maxima)",
        outcome,
        variation,
        amplitude,
        period,
        maxima.size,
    )
    return outcome
