"""
Graphical and analytic instability conditions for homogeneous rings.

In normalised frequency w = omega * T_A the characteristic function on
the imaginary axis is phi(jw) exp(jw tau_tilde) with
phi(jw) = 1 - Q^2 w^2 + 2jw. Its modulus ("gain") and continuous
argument ("phase") are both strictly increasing for w > 0. The
equilibrium is unstable iff the eigenvalue L exp(j pi/N) of the
interaction matrix lies beyond this curve, which reduces to L > L_bar.
"""

__all__ = [
    "boundary_samples",
    "critical_gain",
    "critical_ratio",
    "crossing_frequency",
    "in_instability_region",
    "phase_frequency",
    "phase_gain",
    "test_analytic",
    "test_graphical",
    "test_ratio",
    "threshold_W",
]

import functools
import logging
import math

import numpy
from scipy import optimize

from cyclosc.errors import DomainError, NoCrossingError, NotApplicableError
from cyclosc.linearization.reduction import ratio_from_gain
from cyclosc.network.hill import REPRESS
from cyclosc.stability.verdict import (
    INCONCLUSIVE,
    LOCALLY_STABLE,
    OSCILLATIONS,
    Verdict,
    Witness,
)

log = logging.getLogger("cyclosc-logger")

MAX_DOUBLINGS = 200


def _check_q(name, Q):  # pylint: disable=invalid-name
    if not 0.0 < Q <= 1.0:
        raise DomainError(f"{name}: Q must lie in (0, 1], got {Q}")


def _check_n(name, N):  # pylint: disable=invalid-name
    if int(N) != N or N < 1:
        raise DomainError(f"{name}: N must be a positive integer, got {N}")


def _check_tau(name, tau_tilde):
    if not tau_tilde >= 0.0:
        raise DomainError(f"{name}: tau_tilde must be >= 0, got {tau_tilde}")


def phase_gain(Q, tau_tilde, omega_tilde):  # pylint: disable=invalid-name
    """
    Gain and continuous phase of phi(jw) exp(jw tau_tilde).

    :param Q: time-constant ratio, in (0, 1]
    :param tau_tilde: normalised delay, >= 0
    :param omega_tilde: normalised frequency (scalar or array), >= 0
    :return: (gain, phase), shaped like omega_tilde
    """
    _check_q("phase_gain", Q)
    _check_tau("phase_gain", tau_tilde)
    omega = numpy.asarray(omega_tilde, dtype=float)
    if numpy.any(~(omega >= 0.0)):
        raise DomainError("phase_gain: Frequency must be >= 0")
    real = 1.0 - Q * Q * omega * omega
    imag = 2.0 * omega
    with numpy.errstate(over="ignore"):
        gain = numpy.hypot(real, imag)
    # atan2 stays on the branch [0, pi] for omega >= 0
    phase = numpy.arctan2(imag, real) + omega * tau_tilde
    if gain.ndim == 0:
        return float(gain), float(phase)
    return gain, phase


def threshold_W(N, Q):  # pylint: disable=invalid-name
    """
    Critical gain without delay.

    W = 2 / (cos(pi/N) + sqrt(cos^2(pi/N) + Q^2 sin^2(pi/N))), infinite
    for N = 1.

    :param N: number of genes, >= 1
    :param Q: time-constant ratio, in (0, 1]
    :return: W
    """
    _check_n("threshold_W", N)
    _check_q("threshold_W", Q)
    if N == 1:
        return math.inf
    cos_n = math.cos(math.pi / N)
    sin_n = math.sin(math.pi / N)
    return 2.0 / (cos_n + math.sqrt(cos_n * cos_n + Q * Q * sin_n * sin_n))


def crossing_frequency(Q, L):  # pylint: disable=invalid-name
    """
    Normalised frequency at which the gain equals L.

    Uses w*^2 = (L^2 - 1) / (sqrt(D) + 2 - Q^2),
    D = 4 (1 - Q^2) + Q^4 L^2, which avoids cancellation as L -> 1.

    :param Q: time-constant ratio, in (0, 1]
    :param L: gain level, > 1
    :return: w*
    """
    _check_q("crossing_frequency", Q)
    if not L > 1.0:
        raise NoCrossingError(
            f"crossing_frequency: Gain {L} never reached, the gain curve "
            "starts at 1"
        )
    if math.isinf(L):
        return math.inf
    q_sq = Q * Q
    disc = 4.0 * (1.0 - q_sq) + q_sq * q_sq * L * L
    return math.sqrt((L * L - 1.0) / (math.sqrt(disc) + 2.0 - q_sq))


def phase_frequency(
    Q, tau_tilde, target, tol=1e-10
):  # pylint: disable=invalid-name
    """
    Normalised frequency at which the continuous phase reaches a target.

    :param Q: time-constant ratio
    :param tau_tilde: normalised delay
    :param target: phase in [0, pi] (or above, when tau_tilde > 0)
    :param tol: absolute frequency tolerance
    :return: frequency, or inf when the phase never gets there
    """
    if target <= 0.0:
        return 0.0
    if tau_tilde == 0.0 and target >= math.pi:
        return math.inf

    def _excess(omega):
        return phase_gain(Q, tau_tilde, omega)[1] - target

    upper = 1.0
    for _ in range(MAX_DOUBLINGS):
        if _excess(upper) >= 0.0:
            break
        upper *= 2.0
    else:
        return math.inf
    return optimize.bisect(_excess, 0.0, upper, xtol=tol, maxiter=500)


@functools.lru_cache(maxsize=65536)
def critical_gain(
    N, Q, tau_tilde, tol=1e-10
):  # pylint: disable=invalid-name
    """
    Critical average gain L_bar(N, Q, tau_tilde).

    Root in (1, W(N, Q)] of phase(w*(L)) = pi/N; the left side increases
    with L. Equals W at zero delay.

    :param N: number of genes
    :param Q: time-constant ratio
    :param tau_tilde: normalised delay
    :param tol: absolute tolerance on L_bar
    :return: L_bar (inf for N = 1 without delay)
    """
    _check_n("critical_gain", N)
    _check_q("critical_gain", Q)
    _check_tau("critical_gain", tau_tilde)
    bound = threshold_W(N, Q)
    if tau_tilde == 0.0:
        return bound
    target = math.pi / N

    def _excess(gain):
        omega = crossing_frequency(Q, gain)
        return phase_gain(Q, tau_tilde, omega)[1] - target

    # the delay term alone reaches pi/N here
    upper = min(bound, phase_gain(Q, tau_tilde, target / tau_tilde)[0])
    if _excess(upper) <= 0.0:
        return upper
    lower = 1.0 + 1e-15
    if _excess(lower) >= 0.0:
        return lower
    return optimize.bisect(_excess, lower, upper, xtol=tol, maxiter=500)


def critical_ratio(nu, L_bar):  # pylint: disable=invalid-name
    """
    Critical loop ratio R_bar for a homogeneous repressive ring.

    R_bar^2 = (L_bar / (nu - L_bar))^(1/nu) * nu / (nu - L_bar).

    :param nu: Hill coefficient
    :param L_bar: critical gain
    :return: R_bar
    """
    if not nu > L_bar:
        raise NotApplicableError(
            f"critical_ratio: Hill coefficient {nu} does not exceed the "
            f"critical gain {L_bar}; the gain can never reach it"
        )
    return ratio_from_gain(nu, L_bar)


def _outcome(margin, tie_band):
    return OSCILLATIONS if margin > tie_band else LOCALLY_STABLE


def _omega_star(rm):
    if rm.L > 1.0:
        return crossing_frequency(rm.Q, rm.L)
    return None


def test_analytic(rm, tol=1e-10, tie_band=1e-9):
    """
    Compare the average gain with its critical value.

    :param rm: ReducedModel
    :param tol: tolerance of the L_bar root find
    :param tie_band: margins within this band count as stable
    :return: Verdict
    """
    l_bar = critical_gain(rm.N, rm.Q, rm.tau_tilde, tol)
    margin = rm.L - l_bar
    verdict = Verdict(
        outcome=_outcome(margin, tie_band),
        method="analytic",
        margin=margin,
        witness=Witness(omega_star=_omega_star(rm)),
        L=rm.L,
        L_bar=l_bar,
        Q=rm.Q,
        tau_tilde=rm.tau_tilde,
        N=rm.N,
    )
    log.info(
        "test_analytic: L = %.6g, L_bar = %.6g, %s",
        rm.L,
        l_bar,
        verdict.outcome,
    )
    return verdict


def test_graphical(rm, tol=1e-10, tie_band=1e-9):
    """
    Check whether the eigenvalue L exp(j pi/N) lies in the instability
    region, via the frequency where the phase equals pi/N.

    :param rm: ReducedModel
    :param tol: tolerance of the frequency root find
    :param tie_band: margins within this band count as stable
    :return: Verdict with omega_sharp and omega_star
    """
    omega_sharp = phase_frequency(rm.Q, rm.tau_tilde, math.pi / rm.N, tol)
    if math.isinf(omega_sharp):
        edge_gain = math.inf
    else:
        edge_gain = phase_gain(rm.Q, rm.tau_tilde, omega_sharp)[0]
    margin = rm.L - edge_gain
    return Verdict(
        outcome=_outcome(margin, tie_band),
        method="graphical",
        margin=margin,
        witness=Witness(omega_sharp=omega_sharp, omega_star=_omega_star(rm)),
        L=rm.L,
        L_bar=edge_gain,
        Q=rm.Q,
        tau_tilde=rm.tau_tilde,
        N=rm.N,
    )


def in_instability_region(
    Q, tau_tilde, lam, tol=1e-10
):  # pylint: disable=invalid-name
    """
    Whether a complex number lies in the image of the open right half
    plane under phi(s) exp(s tau).

    :param Q: time-constant ratio
    :param tau_tilde: normalised delay
    :param lam: complex point
    :param tol: tolerance of the frequency root find
    :return: bool
    """
    angle = abs(numpy.angle(lam))
    omega = phase_frequency(Q, tau_tilde, angle, tol)
    if math.isinf(omega):
        return False
    return abs(lam) > phase_gain(Q, tau_tilde, omega)[0]


def test_ratio(rm, spec, tol=1e-10, tie_band=1e-9):
    """
    Compare the loop ratio R with its critical value R_bar.

    Exact for rings of identical repressive genes without leak; there
    L < nu always, so nu <= L_bar means stable.

    :param rm: ReducedModel
    :param spec: NetworkSpec rm was reduced from
    :param tol: tolerance of the L_bar root find
    :param tie_band: margins within this band count as stable
    :return: Verdict, margin R - R_bar (or nu - L_bar)
    """
    l_bar = critical_gain(rm.N, rm.Q, rm.tau_tilde, tol)
    common = {
        "L": rm.L,
        "L_bar": l_bar,
        "Q": rm.Q,
        "tau_tilde": rm.tau_tilde,
        "N": rm.N,
    }
    uniform = (
        all(gene.regulation == REPRESS for gene in spec.genes)
        and all(gene.alpha0 == 0.0 for gene in spec.genes)
        and numpy.ptp(rm.R) <= 1e-9 * rm.R[0]
    )
    if not uniform:
        return Verdict(
            outcome=INCONCLUSIVE,
            method="ratio",
            note="ratio test needs identical repressive genes without leak",
            **common,
        )
    if not spec.nu > l_bar:
        return Verdict(
            outcome=LOCALLY_STABLE,
            method="ratio",
            margin=spec.nu - l_bar,
            note="L < nu <= L_bar, R_bar not applicable",
            **common,
        )
    r_bar = critical_ratio(spec.nu, l_bar)
    margin = float(rm.R[0]) - r_bar
    return Verdict(
        outcome=_outcome(margin, tie_band),
        method="ratio",
        margin=margin,
        note=f"R = {rm.R[0]:.6g}, R_bar = {r_bar:.6g}",
        **common,
    )


def boundary_samples(
    Q, tau_tilde, omega_max, n
):  # pylint: disable=invalid-name
    """
    Points of the instability-region boundary gain * exp(j phase).

    :param Q: time-constant ratio
    :param tau_tilde: normalised delay
    :param omega_max: largest normalised frequency, > 0
    :param n: samples on [0, omega_max], >= 2
    :return: (omega_tilde, points); negative frequencies carry the
             conjugate branch
    """
    if n < 2 or not omega_max > 0.0:
        raise DomainError(
            "boundary_samples: Need n >= 2 and omega_max > 0, got "
            f"n={n}, omega_max={omega_max}"
        )
    omega = numpy.linspace(0.0, omega_max, n)
    gain, phase = phase_gain(Q, tau_tilde, omega)
    upper = gain * numpy.exp(1j * phase)
    omega_all = numpy.concatenate([-omega[:0:-1], omega])
    points = numpy.concatenate([numpy.conj(upper[:0:-1]), upper])
    return omega_all, points


# verdict functions, not test cases for pytest collection
test_analytic.__test__ = False
test_graphical.__test__ = False
test_ratio.__test__ = False
