"""
Default tolerances for the analysis pipeline.
"""

__all__ = [
    "REFERENCE_TOL",
    "create_analysis_controls",
    "scale_controls",
    "update_controls",
]

import logging

from cyclosc.errors import DomainError

log = logging.getLogger("cyclosc-logger")

REFERENCE_TOL = 1e-10

_SCALED_KEYS = ("equilibrium_tol", "scalar_tol", "newton_tol", "tie_band")


def create_analysis_controls():
    """
    Create a dictionary containing default analysis controls.

    The fields are

        equilibrium_tol: relative tolerance of the equilibrium bisection
        scalar_tol: tolerance of scalar root finds (L_bar, omega_sharp)
        newton_tol: residual tolerance of characteristic-root Newton
        tie_band: |margin| below which a verdict counts as a tie (stable)
        homogeneity_tol: relative spread of a, b accepted as homogeneous
        root_grid: Newton seeds per side of the search rectangle
        nyquist_n: base frequency samples of the Nyquist curve
        nyquist_gain_floor: loop gain at which the frequency range ends
        nyquist_max_refine: refinement rounds of the Nyquist grid

    First get this default dictionary and then adjust as desired.

    :return: dictionary
    """
    controls = {
        "equilibrium_tol": 1e-12,
        "scalar_tol": 1e-10,
        "newton_tol": 1e-8,
        "tie_band": 1e-9,
        "homogeneity_tol": 1e-9,
        "root_grid": 40,
        "nyquist_n": 4096,
        "nyquist_gain_floor": 0.1,
        "nyquist_max_refine": 12,
    }
    return controls


def scale_controls(controls, tol, reference=REFERENCE_TOL):
    """
    Scale all tolerances proportionally to a single user tolerance.

    :param controls: controls dictionary, not modified
    :param tol: requested scalar tolerance, > 0
    :param reference: tolerance the defaults correspond to
    :return: new controls dictionary
    """
    if not tol > 0.0:
        raise DomainError(f"scale_controls: Tolerance must be > 0, got {tol}")
    factor = tol / reference
    scaled = dict(controls)
    for key in _SCALED_KEYS:
        if key in scaled:
            scaled[key] = scaled[key] * factor
    log.debug("scale_controls: Tolerances scaled by %g", factor)
    return scaled


def update_controls(controls, overrides):
    """
    Merge user overrides into a controls dictionary.

    :param controls: controls dictionary, not modified
    :param overrides: mapping of known keys to new values
    :return: new controls dictionary
    """
    unknown = sorted(set(overrides) - set(controls))
    if unknown:
        raise DomainError(
            f"update_controls: Unknown control keys {', '.join(unknown)}"
        )
    merged = dict(controls)
    for key, value in overrides.items():
        default = controls[key]
        if default is None or value is None:
            merged[key] = value
        else:
            merged[key] = type(default)(value)
    return merged
