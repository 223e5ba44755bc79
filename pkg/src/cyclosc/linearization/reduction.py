"""
Reduction of a linearised homogeneous network to its essential
dimensionless quantities: gene count N, time-constant ratio Q,
normalised mean delay tau_tilde, loop ratios R_i and average gain L.

Protein levels are normalised by each gene's Hill scale p0 here, so
R_i^2 = c_i beta_i / (a_i b_i p0_i); the loop gains zeta_i R_i^2 do not
depend on that choice.
"""

__all__ = [
    "ReducedModel",
    "eigenvalue_ring",
    "gain_from_ratio",
    "ratio_from_gain",
    "reduce",
]

import dataclasses
import logging

import numpy

from cyclosc.equilibrium.solvers import (
    homogeneous_equilibrium,
    solve_equilibrium,
)
from cyclosc.errors import (
    DomainError,
    HeterogeneousSpecError,
    NotApplicableError,
)

log = logging.getLogger("cyclosc-logger")


@dataclasses.dataclass(frozen=True)
class ReducedModel:  # pylint: disable=too-many-instance-attributes
    """
    Homogeneous linearisation summary.

    :param N: number of genes
    :param T_r: mRNA time constant 1/a
    :param T_p: protein time constant 1/b
    :param T_A: arithmetic mean of T_r and T_p
    :param T_G: geometric mean of T_r and T_p
    :param Q: T_G / T_A, in (0, 1]
    :param tau: mean per-gene delay tau_r + tau_p
    :param tau_tilde: tau / T_A
    :param R: per-gene loop ratios
    :param zeta: per-gene Hill slopes in normalised protein units
    :param L: average gain
    :param lambda_: eigenvalues of the interaction matrix
    """

    # pylint: disable=invalid-name
    N: int
    T_r: float
    T_p: float
    T_A: float
    T_G: float
    Q: float
    tau: float
    tau_tilde: float
    R: numpy.ndarray
    zeta: numpy.ndarray
    L: float
    lambda_: numpy.ndarray

    @property
    def gains(self):
        """Per-gene loop gains zeta_i R_i^2"""
        return self.zeta * self.R**2

    def eigenvalue(self, k):
        """
        k-th eigenvalue, k = 1 .. N, L exp(j (2k-1) pi / N).

        :param k: index starting at 1
        :return: complex
        """
        return self.lambda_[k - 1]

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "N": self.N,
            "T_r": self.T_r,
            "T_p": self.T_p,
            "T_A": self.T_A,
            "T_G": self.T_G,
            "Q": self.Q,
            "tau": self.tau,
            "tau_tilde": self.tau_tilde,
            "R": self.R.tolist(),
            "zeta": self.zeta.tolist(),
            "L": self.L,
            "eigenvalues": [[z.real, z.imag] for z in self.lambda_],
        }


def eigenvalue_ring(n_genes, gain):
    """
    Eigenvalues of a negative cyclic interaction matrix.

    :param n_genes: N
    :param gain: radius L
    :return: complex array L exp(j (2k-1) pi / N), k = 1 .. N
    """
    k = numpy.arange(1, n_genes + 1)
    return gain * numpy.exp(1j * (2 * k - 1) * numpy.pi / n_genes)


def _check_homogeneous(values, name, rtol):
    ref = values[0]
    bad = numpy.flatnonzero(numpy.abs(values - ref) > rtol * abs(ref))
    if bad.size:
        raise HeterogeneousSpecError(
            f"reduce: Rate {name} differs between genes (gene {bad[0]} has "
            f"{values[bad[0]]}, gene 0 has {ref}); apply "
            "worst_case_reduction first or use nyquist_winding",
            gene=int(bad[0]),
        )


def reduce(spec, eq=None, zeta=None, homogeneity_tol=1e-9):
    """
    Reduce a homogeneous network to a ReducedModel.

    :param spec: validated NetworkSpec with common a and b
    :param eq: Equilibrium of spec; solved here when None
    :param zeta: optional physical Hill slopes, used instead of eq
                 (magnitudes; signs follow each regulation)
    :param homogeneity_tol: relative tolerance on a and b
    :return: ReducedModel
    """
    a_rates = spec.column("a")
    b_rates = spec.column("b")
    _check_homogeneous(a_rates, "a", homogeneity_tol)
    _check_homogeneous(b_rates, "b", homogeneity_tol)

    if zeta is None:
        if eq is None:
            eq = solve_equilibrium(spec)
        zeta_phys = numpy.asarray(eq.zeta, dtype=float)
    else:
        signs = numpy.array([gene.sign for gene in spec.genes])
        zeta_phys = signs * numpy.abs(numpy.asarray(zeta, dtype=float))

    t_r = 1.0 / a_rates.mean()
    t_p = 1.0 / b_rates.mean()
    t_a = 0.5 * (t_r + t_p)
    t_g = numpy.sqrt(t_r * t_p)
    q_ratio = min(t_g / t_a, 1.0)

    tau = float(numpy.mean(spec.column("tau_r") + spec.column("tau_p")))

    p0 = spec.column("p0")
    ratio = numpy.sqrt(
        spec.column("c") * spec.column("beta") / (a_rates * b_rates * p0)
    )
    # gene i reads protein i-1, so its slope is measured in that scale
    zeta_norm = zeta_phys * numpy.roll(p0, 1)
    gains = numpy.abs(zeta_norm) * ratio**2
    if numpy.any(gains == 0.0):
        gain = 0.0
    else:
        gain = float(numpy.exp(numpy.mean(numpy.log(gains))))

    model = ReducedModel(
        N=spec.N,
        T_r=t_r,
        T_p=t_p,
        T_A=t_a,
        T_G=t_g,
        Q=q_ratio,
        tau=tau,
        tau_tilde=tau / t_a,
        R=ratio,
        zeta=zeta_norm,
        L=gain,
        lambda_=eigenvalue_ring(spec.N, gain),
    )
    log.debug(
        "reduce: N=%d Q=%.6g tau_tilde=%.6g L=%.6g",
        model.N,
        model.Q,
        model.tau_tilde,
        model.L,
    )
    return model


def gain_from_ratio(nu, R):  # pylint: disable=invalid-name
    """
    Average gain of a homogeneous repressive ring with loop ratio R.

    :param nu: Hill coefficient
    :param R: loop ratio, > 0
    :return: L = nu p^nu / (1 + p^nu) with p (1 + p^nu) = R^2
    """
    p_star = homogeneous_equilibrium(nu, R * R)
    p_nu = p_star**nu
    return nu * p_nu / (1.0 + p_nu)


def ratio_from_gain(nu, L):  # pylint: disable=invalid-name
    """
    Loop ratio producing a given average gain; inverse of gain_from_ratio.

    :param nu: Hill coefficient
    :param L: average gain, 0 <= L < nu
    :return: R
    """
    if not L >= 0.0:
        raise DomainError(f"ratio_from_gain: Gain must be >= 0, got {L}")
    if not nu > L:
        raise NotApplicableError(
            f"ratio_from_gain: Gain {L} is not below the Hill coefficient "
            f"{nu}; no loop ratio reaches it"
        )
    r_squared = (L / (nu - L)) ** (1.0 / nu) * nu / (nu - L)
    return float(numpy.sqrt(r_squared))
