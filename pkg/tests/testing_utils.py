"""
Util functions for testing.
"""

import logging
import math

import numpy

from cyclosc.linearization.reduction import ReducedModel, eigenvalue_ring
from cyclosc.network.hill import ACTIVATE, REPRESS
from cyclosc.network.network_model import NetworkSpec, validate

log = logging.getLogger("cyclosc-logger")


def reduced_model(N, Q, tau_tilde, L, T_A=1.0):  # pylint: disable=invalid-name
    """
    Build a ReducedModel directly from its dimensionless groups.

    The time constants are T_A (1 +- sqrt(1 - Q^2)), so that their
    geometric mean over their arithmetic mean is Q.

    :param N: number of genes
    :param Q: time-constant ratio
    :param tau_tilde: normalised delay
    :param L: average gain
    :param T_A: mean time constant
    :return: ReducedModel
    """
    spread = math.sqrt(max(1.0 - Q * Q, 0.0))
    t_r = T_A * (1.0 + spread)
    t_p = T_A * (1.0 - spread)
    return ReducedModel(
        N=N,
        T_r=t_r,
        T_p=t_p,
        T_A=T_A,
        T_G=math.sqrt(t_r * t_p),
        Q=Q,
        tau=tau_tilde * T_A,
        tau_tilde=tau_tilde,
        R=numpy.ones(N),
        zeta=-L * numpy.ones(N),
        L=L,
        lambda_=eigenvalue_ring(N, L),
    )


def random_ring(rng, n_genes=None):
    """
    Random homogeneous ring with a negative loop sign.

    All genes repress, except gene 0 activates when N is even, so the
    product of regulation signs is always -1.

    :param rng: numpy Generator
    :param n_genes: N; drawn from 1 .. 8 when None
    :return: validated NetworkSpec
    """
    if n_genes is None:
        n_genes = int(rng.integers(1, 9))
    delay = float(rng.uniform(0.0, 2.0))
    log.debug("random_ring: N=%d, delay %.3f", n_genes, delay)
    spec = NetworkSpec.homogeneous(
        n_genes,
        float(rng.uniform(1.0, 4.0)),
        a=float(rng.uniform(0.2, 5.0)),
        b=float(rng.uniform(0.2, 5.0)),
        c=float(rng.uniform(0.5, 5.0)),
        beta=float(rng.uniform(0.5, 20.0)),
        tau_r=0.5 * delay,
        tau_p=0.5 * delay,
    )
    if n_genes % 2 == 0:
        spec = spec.replace_genes(
            regulation=[ACTIVATE] + [REPRESS] * (n_genes - 1)
        )
    assert spec.delta == -1
    return validate(spec)
