"""
Analysis report: every quantity computed on the way from a network to
its oscillation verdicts.
"""

__all__ = ["AnalysisReport", "build_report", "parse_methods", "version"]

import dataclasses
import logging
import math
from importlib import metadata
from typing import Optional

from cyclosc.ddesim.mps_form import mps_form_check
from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.errors import DomainError, HeterogeneousSpecError
from cyclosc.linearization.reduction import reduce
from cyclosc.stability.analytic import (
    critical_gain,
    critical_ratio,
    test_analytic,
    test_graphical,
    test_ratio,
    threshold_W,
)
from cyclosc.stability.controls import create_analysis_controls
from cyclosc.stability.nyquist import test_nyquist
from cyclosc.stability.roots import test_roots
from cyclosc.stability.verdict import (
    INCONCLUSIVE,
    METHODS,
    Verdict,
    combine_verdicts,
)

log = logging.getLogger("cyclosc-logger")

DEFAULT_METHODS = ("analytic", "graphical")
NOT_APPLICABLE = "not-applicable"


def version():
    """Installed package version, "unknown" when not installed"""
    try:
        return metadata.version("cyclosc")
    except metadata.PackageNotFoundError:
        return "unknown"


def parse_methods(text):
    """
    Parse a comma separated list of test methods.

    :param text: e.g. "analytic,roots" or "all"
    :return: tuple of method names in the given order
    """
    if text.strip() == "all":
        return METHODS
    methods = tuple(item.strip() for item in text.split(",") if item.strip())
    unknown = [item for item in methods if item not in METHODS]
    if unknown or not methods:
        raise DomainError(
            f"parse_methods: Unknown methods {unknown}, choose from "
            f"{', '.join(METHODS)} or all"
        )
    return methods


def _finite(value):
    value = float(value)
    return value if math.isfinite(value) else None


@dataclasses.dataclass
class AnalysisReport:
    """
    Collected analysis of one network.

    :param spec: the analysed NetworkSpec
    :param equilibrium: Equilibrium
    :param reduced: ReducedModel, None for heterogeneous networks
    :param thresholds: W, L_bar and R_bar (or "not-applicable")
    :param verdicts: Verdict per requested method, in request order
    :param mps_form: MPSFormReport when the network has delays
    """

    spec: object
    equilibrium: object
    reduced: Optional[object]
    thresholds: dict
    verdicts: list
    mps_form: Optional[object] = None

    @property
    def outcome(self):
        """Combined outcome of all verdicts"""
        return combine_verdicts(self.verdicts)

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "version": version(),
            "spec": self.spec.to_dict(),
            "equilibrium": self.equilibrium.to_dict(),
            "reduced": (
                None if self.reduced is None else self.reduced.to_dict()
            ),
            "thresholds": self.thresholds,
            "verdicts": {
                verdict.method: verdict.to_dict() for verdict in self.verdicts
            },
            "outcome": self.outcome,
            "mps_form": (
                None if self.mps_form is None else self.mps_form.to_dict()
            ),
        }


def _thresholds(spec, rm, tol):
    if rm is None:
        return {}
    l_bar = critical_gain(rm.N, rm.Q, rm.tau_tilde, tol)
    try:
        r_bar = critical_ratio(spec.nu, l_bar)
    except DomainError:
        r_bar = NOT_APPLICABLE
    return {
        "W": _finite(threshold_W(rm.N, rm.Q)),
        "L_bar": _finite(l_bar),
        "R_bar": r_bar,
    }


def _run_method(method, spec, eq, rm, controls):
    """Verdict of one method, Inconclusive when it cannot apply"""
    if method == "nyquist":
        return test_nyquist(spec, eq, controls)
    if rm is None:
        return Verdict(
            outcome=INCONCLUSIVE,
            method=method,
            note="network is heterogeneous, no reduced model",
        )
    tol, band = controls["scalar_tol"], controls["tie_band"]
    if method == "analytic":
        return test_analytic(rm, tol, band)
    if method == "graphical":
        return test_graphical(rm, tol, band)
    if method == "ratio":
        return test_ratio(rm, spec, tol, band)
    return test_roots(
        rm, controls["newton_tol"], grid=controls["root_grid"]
    )


def build_report(spec, methods=DEFAULT_METHODS, controls=None):
    """
    Solve, reduce and test a network.

    :param spec: validated NetworkSpec
    :param methods: names from METHODS
    :param controls: analysis controls, see create_analysis_controls
    :return: AnalysisReport
    """
    if controls is None:
        controls = create_analysis_controls()
    eq = solve_equilibrium(spec, controls["equilibrium_tol"])
    try:
        rm = reduce(spec, eq, homogeneity_tol=controls["homogeneity_tol"])
    except HeterogeneousSpecError as err:
        log.warning("build_report: %s", err)
        rm = None

    verdicts = [
        _run_method(method, spec, eq, rm, controls) for method in methods
    ]
    mps_form = mps_form_check(spec) if spec.total_delay > 0.0 else None
    report = AnalysisReport(
        spec=spec,
        equilibrium=eq,
        reduced=rm,
        thresholds=_thresholds(spec, rm, controls["scalar_tol"]),
        verdicts=verdicts,
        mps_form=mps_form,
    )
    log.info("build_report: %s from %s", report.outcome, ", ".join(methods))
    return report
