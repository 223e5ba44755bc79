"""
Nyquist test on the full, possibly heterogeneous, network.

The loop transfer is

    G(s) = -prod_i c_i beta_i zeta_i exp(-s (tau_ri + tau_pi))
                   / ((s + a_i)(s + b_i))

and the closed loop is unstable iff 1 + G(j omega) encircles the origin.
All open-loop poles lie at -a_i, -b_i, so the clockwise winding number
counts the unstable closed-loop poles.
"""

__all__ = [
    "NyquistCurve",
    "loop_transfer",
    "nyquist_curve",
    "nyquist_winding",
    "test_nyquist",
]

import dataclasses
import logging
from typing import Optional

import numpy

from cyclosc.equilibrium.solvers import solve_equilibrium
from cyclosc.errors import DomainError
from cyclosc.stability.verdict import (
    INCONCLUSIVE,
    LOCALLY_STABLE,
    OSCILLATIONS,
    Verdict,
    Witness,
)

log = logging.getLogger("cyclosc-logger")

MAX_EXTENSIONS = 60


@dataclasses.dataclass(frozen=True)
class NyquistCurve:
    """
    Sampled loop transfer on [0, omega_max].

    :param omega: frequencies (rad/time), increasing, starting at 0
    :param values: G(j omega)
    :param omega_max: end of the sampled range
    :param winding: clockwise encirclements of -1 over the full contour,
                    None when the sampling could not resolve it
    :param refinements: refinement rounds used
    """

    omega: numpy.ndarray
    values: numpy.ndarray
    omega_max: float
    winding: Optional[int]
    refinements: int

    def full_contour(self):
        """Samples on [-omega_max, omega_max], conjugate branch first"""
        omega = numpy.concatenate([-self.omega[:0:-1], self.omega])
        values = numpy.concatenate(
            [numpy.conj(self.values[:0:-1]), self.values]
        )
        return omega, values


def _loop_data(spec, eq, zeta):
    if zeta is None:
        if eq is None:
            eq = solve_equilibrium(spec)
        zeta = eq.zeta
    else:
        signs = numpy.array([gene.sign for gene in spec.genes])
        zeta = signs * numpy.abs(numpy.asarray(zeta, dtype=float))
    gain = float(
        numpy.prod(
            spec.column("c") * spec.column("beta") * numpy.asarray(zeta)
        )
    )
    return (
        gain,
        spec.column("a"),
        spec.column("b"),
        spec.total_delay,
    )


def _evaluate(loop, s):
    gain, a_rates, b_rates, delay = loop
    s = numpy.asarray(s, dtype=complex)
    denominator = numpy.ones_like(s)
    for a_rate, b_rate in zip(a_rates, b_rates):
        denominator = denominator * (s + a_rate) * (s + b_rate)
    return -gain * numpy.exp(-s * delay) / denominator


def loop_transfer(spec, s, eq=None, zeta=None):
    """
    Evaluate the loop transfer G(s).

    :param spec: NetworkSpec
    :param s: complex point(s)
    :param eq: Equilibrium; solved when None and zeta is None
    :param zeta: optional Hill slopes replacing the equilibrium ones
    :return: G(s), shaped like s
    """
    return _evaluate(_loop_data(spec, eq, zeta), s)


def _frequency_grid(omega_max, n, smallest_rate):
    half = n // 2
    start = min(smallest_rate * 1e-3, omega_max * 1e-6)
    log_part = numpy.geomspace(start, omega_max, half)
    lin_part = numpy.linspace(0.0, omega_max, n - half)
    return numpy.unique(numpy.concatenate([[0.0], log_part, lin_part]))


def _increments(values):
    shifted = 1.0 + values
    with numpy.errstate(divide="ignore", invalid="ignore"):
        return numpy.angle(shifted[1:] / shifted[:-1])


def nyquist_curve(
    spec,
    eq=None,
    omega_max=None,
    n=4096,
    zeta=None,
    gain_floor=0.1,
    max_refine=12,
):  # pylint: disable=too-many-arguments,too-many-locals
    """
    Sample the loop transfer and count its encirclements of -1.

    The range is extended until |G(j omega_max)| < gain_floor; intervals
    whose phase step of 1 + G exceeds pi/4 (pi/16 near -1) are bisected.

    :param spec: NetworkSpec; homogeneity not required
    :param eq: Equilibrium of spec; solved when None and zeta is None
    :param omega_max: initial range end (rad/time)
    :param n: base number of samples, even
    :param zeta: optional Hill slopes replacing the equilibrium ones
    :param gain_floor: loop gain at which sampling may stop
    :param max_refine: refinement rounds
    :return: NyquistCurve
    """
    if n < 4 or n % 2:
        raise DomainError(f"nyquist_curve: n must be even and >= 4, got {n}")
    loop = _loop_data(spec, eq, zeta)
    rates = numpy.concatenate([loop[1], loop[2]])
    if omega_max is None:
        omega_max = 10.0 * float(rates.max())
    if not omega_max > 0.0:
        raise DomainError(
            f"nyquist_curve: omega_max must be > 0, got {omega_max}"
        )
    for _ in range(MAX_EXTENSIONS):
        if abs(_evaluate(loop, 1j * omega_max)) < gain_floor:
            break
        omega_max *= 2.0

    omega = _frequency_grid(omega_max, n, float(rates.min()))
    values = _evaluate(loop, 1j * omega)
    rounds = 0
    for rounds in range(1, max_refine + 1):
        steps = numpy.abs(_increments(values))
        near = numpy.minimum(
            numpy.abs(1.0 + values[1:]), numpy.abs(1.0 + values[:-1])
        ) < gain_floor
        coarse = (steps > numpy.pi / 4.0) | (near & (steps > numpy.pi / 16.0))
        if not numpy.any(coarse):
            rounds -= 1
            break
        mids = 0.5 * (omega[1:][coarse] + omega[:-1][coarse])
        omega = numpy.sort(numpy.concatenate([omega, mids]))
        values = _evaluate(loop, 1j * omega)
        log.debug(
            "nyquist_curve: Round %d added %d samples", rounds, mids.size
        )

    steps = _increments(values)
    if not numpy.all(numpy.isfinite(steps)) or numpy.any(
        numpy.abs(steps) > numpy.pi / 2.0
    ):
        log.warning(
            "nyquist_curve: Sampling too coarse after %d refinements", rounds
        )
        winding = None
    else:
        # the negative half mirrors the positive one
        total = 2.0 * float(numpy.sum(steps))
        winding = int(round(-total / (2.0 * numpy.pi)))

    return NyquistCurve(
        omega=omega,
        values=values,
        omega_max=float(omega_max),
        winding=winding,
        refinements=rounds,
    )


def nyquist_winding(
    spec, eq=None, omega_max=None, n=4096, zeta=None
):  # pylint: disable=too-many-arguments
    """
    Clockwise winding number of the loop transfer around -1.

    Positive values count unstable closed-loop poles; None means the
    sampling could not resolve the curve.

    :param spec: NetworkSpec
    :param eq: Equilibrium of spec
    :param omega_max: initial range end (rad/time)
    :param n: base number of samples, even
    :param zeta: optional Hill slopes replacing the equilibrium ones
    :return: int or None
    """
    return nyquist_curve(spec, eq, omega_max, n, zeta).winding


def test_nyquist(spec, eq=None, controls=None, zeta=None):
    """
    Verdict from the Nyquist winding number.

    :param spec: NetworkSpec
    :param eq: Equilibrium of spec
    :param controls: analysis controls (nyquist_n, nyquist_gain_floor,
                     nyquist_max_refine)
    :param zeta: optional Hill slopes replacing the equilibrium ones
    :return: Verdict, margin = winding (None when unresolved)
    """
    controls = controls or {}
    curve = nyquist_curve(
        spec,
        eq,
        n=controls.get("nyquist_n", 4096),
        zeta=zeta,
        gain_floor=controls.get("nyquist_gain_floor", 0.1),
        max_refine=controls.get("nyquist_max_refine", 12),
    )
    witness = Witness(winding=curve.winding)
    if curve.winding is None:
        return Verdict(
            outcome=INCONCLUSIVE,
            method="nyquist",
            witness=witness,
            note="frequency sampling too coarse near -1",
            N=spec.N,
        )
    if curve.winding > 0:
        outcome = OSCILLATIONS
    elif curve.winding == 0:
        outcome = LOCALLY_STABLE
    else:
        outcome = INCONCLUSIVE
    return Verdict(
        outcome=outcome,
        method="nyquist",
        margin=float(curve.winding),
        witness=witness,
        N=spec.N,
    )


# not a test case for pytest collection
test_nyquist.__test__ = False
