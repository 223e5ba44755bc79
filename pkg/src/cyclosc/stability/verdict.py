"""
Outcome records of the stability tests.
"""

__all__ = [
    "INCONCLUSIVE",
    "LOCALLY_STABLE",
    "METHODS",
    "OSCILLATIONS",
    "Verdict",
    "Witness",
    "combine_verdicts",
]

import dataclasses
import math
from typing import Optional

OSCILLATIONS = "OscillationsGuaranteed"
LOCALLY_STABLE = "LocallyStable"
INCONCLUSIVE = "Inconclusive"

METHODS = ("analytic", "graphical", "ratio", "roots", "nyquist")


def _finite_or_none(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


@dataclasses.dataclass(frozen=True)
class Witness:
    """
    Frequencies and roots supporting a verdict.

    :param omega_sharp: normalised frequency where the phase equals pi/N
    :param omega_star: normalised frequency where the gain equals L
    :param dominant_root: rightmost characteristic root
    :param winding: clockwise encirclements of -1 by the loop transfer
    """

    omega_sharp: Optional[float] = None
    omega_star: Optional[float] = None
    dominant_root: Optional[complex] = None
    winding: Optional[int] = None

    def to_dict(self):
        """JSON-ready dictionary"""
        root = self.dominant_root
        return {
            "omega_sharp": _finite_or_none(self.omega_sharp),
            "omega_star": _finite_or_none(self.omega_star),
            "dominant_root": None if root is None else [root.real, root.imag],
            "winding": self.winding,
        }


@dataclasses.dataclass(frozen=True)
class Verdict:  # pylint: disable=too-many-instance-attributes
    """
    Result of one stability test.

    margin is positive when the test certifies oscillations; for the
    analytic and graphical tests it is L - L_bar.
    """

    # pylint: disable=invalid-name
    outcome: str
    method: str
    margin: Optional[float] = None
    witness: Optional[Witness] = None
    note: Optional[str] = None
    L: Optional[float] = None
    L_bar: Optional[float] = None
    Q: Optional[float] = None
    tau_tilde: Optional[float] = None
    N: Optional[int] = None

    @property
    def oscillating(self):
        """True when oscillations are guaranteed"""
        return self.outcome == OSCILLATIONS

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "outcome": self.outcome,
            "method": self.method,
            "margin": _finite_or_none(self.margin),
            "L": _finite_or_none(self.L),
            "L_bar": _finite_or_none(self.L_bar),
            "Q": _finite_or_none(self.Q),
            "tau_tilde": _finite_or_none(self.tau_tilde),
            "N": self.N,
            "witness": (
                None if self.witness is None else self.witness.to_dict()
            ),
            "note": self.note,
        }


def combine_verdicts(verdicts):
    """
    Joint outcome of several tests.

    Inconclusive results are ignored; disagreement among the rest, or no
    decisive result at all, gives Inconclusive.

    :param verdicts: iterable of Verdict
    :return: outcome string
    """
    decisive = {
        verdict.outcome
        for verdict in verdicts
        if verdict.outcome != INCONCLUSIVE
    }
    if len(decisive) == 1:
        return decisive.pop()
    return INCONCLUSIVE
