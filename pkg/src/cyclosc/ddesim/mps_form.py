"""
Check that a delayed cyclic network maps onto a monotone cyclic
feedback system.

Rescaling time by the total loop delay T and flipping signs of the
states with sigma_i turns the network into a chain
x_i' = g_i(x_i, x_{i+1}), x_2N' = g_2N(x_2N, x_1(t - 1)), whose
coupling derivatives must all be positive except the last, which
carries the loop sign z*.
"""

__all__ = ["MPSFormReport", "mps_form_check"]

import dataclasses
import logging

import numpy

from cyclosc.errors import NotApplicableError
from cyclosc.network.hill import hill_derivative

log = logging.getLogger("cyclosc-logger")


@dataclasses.dataclass(frozen=True)
class MPSFormReport:
    """
    Outcome of the monotone-form check.

    :param T: total loop delay
    :param sigma: 2N state signs
    :param rho: 2N coupling signs
    :param z_star: product of rho
    :param delta: loop sign of the network
    :param all_positive: every sampled coupling derivative had the
                         required sign and z_star equals delta
    :param samples: number of random states evaluated
    """

    # pylint: disable=invalid-name
    T: float
    sigma: numpy.ndarray
    rho: numpy.ndarray
    z_star: int
    delta: int
    all_positive: bool
    samples: int

    def to_dict(self):
        """JSON-ready dictionary"""
        return {
            "T": self.T,
            "sigma": self.sigma.tolist(),
            "rho": self.rho.tolist(),
            "z_star": self.z_star,
            "delta": self.delta,
            "all_positive": self.all_positive,
            "samples": self.samples,
        }


def _gene_of(i, n_genes):
    """0-based gene of chain block i = 1 .. N"""
    return (n_genes - i) % n_genes


def mps_form_check(spec, samples=100, rng=None):
    """
    Build the sign pattern of the monotone cyclic form and verify the
    coupling derivatives at random positive states.

    :param spec: validated NetworkSpec with some positive delay
    :param samples: number of random protein states
    :param rng: numpy Generator; seeded default when None
    :return: MPSFormReport
    """
    total = spec.total_delay
    if not total > 0.0:
        raise NotApplicableError(
            "mps_form_check: All delays are zero, the delayed chain form "
            "does not exist"
        )
    if rng is None:
        rng = numpy.random.default_rng(1805550721)
    n_genes = spec.N

    # rho_{2i-1} is the slope sign of gene N-i+2, i.e. 0-based (N-i+1) mod N
    rho = numpy.ones(2 * n_genes, dtype=int)
    for i in range(1, n_genes + 1):
        rho[2 * i - 2] = spec.genes[(n_genes - i + 1) % n_genes].sign
    sigma = numpy.cumprod(numpy.concatenate([[1], rho[1:]]))
    z_star = int(numpy.prod(rho))

    scales = spec.column("p0")
    proteins = rng.uniform(0.01, 10.0, size=(samples, n_genes)) * scales

    positive = True
    for i in range(1, n_genes + 1):
        gene = spec.genes[_gene_of(i, n_genes)]
        # d g_{2i-1} / d x_{2i}
        positive &= gene.c * total * rho[2 * i - 1] > 0.0
        slope = hill_derivative(
            gene.regulation,
            proteins[:, _gene_of(i, n_genes) - 1],
            spec.nu,
            gene.p0,
        )
        if i < n_genes:
            # d g_{2i} / d x_{2i+1}
            coupling = gene.beta * total * sigma[2 * i - 1] * sigma[2 * i]
            positive &= bool(numpy.all(coupling * slope > 0.0))
        else:
            # d g_{2N} / d x_1, signed by z*
            coupling = gene.beta * total * sigma[2 * n_genes - 1]
            positive &= bool(numpy.all(z_star * coupling * slope > 0.0))

    report = MPSFormReport(
        T=total,
        sigma=sigma,
        rho=rho,
        z_star=z_star,
        delta=spec.delta,
        all_positive=bool(positive and z_star == spec.delta),
        samples=samples,
    )
    log.debug(
        "mps_form_check: z* = %d, delta = %d, positive = %s",
        z_star,
        spec.delta,
        report.all_positive,
    )
    return report
