"""
Worst-case reduction of a parameter box to a homogeneous ring.

If the homogeneous ring built from the slowest degradation, weakest
synthesis, shortest delays and flattest Hill slopes of the box is
unstable, every network in the box is unstable.
"""

__all__ = [
    "BOUND_FIELDS",
    "ParameterBounds",
    "WorstCase",
    "worst_case_reduction",
]

import dataclasses
import logging

import numpy

from cyclosc.errors import (
    DomainError,
    EmptyIntervalError,
    NegativeDelayError,
    NonPositiveRateError,
)
from cyclosc.network.network_model import GeneSpec, NetworkSpec, validate

log = logging.getLogger("cyclosc-logger")

BOUND_FIELDS = ("a", "b", "c", "beta", "tau_r", "tau_p", "zeta")
_RATES = ("a", "b", "c", "beta")


@dataclasses.dataclass(frozen=True)
class ParameterBounds:
    """
    Per-gene intervals [lower, upper] of the network parameters.

    zeta bounds refer to |zeta_i|, the magnitude of the Hill slope at
    equilibrium.

    :param lower: dict field -> array of N lower bounds
    :param upper: dict field -> array of N upper bounds
    """

    lower: dict
    upper: dict

    def __post_init__(self):
        for field in BOUND_FIELDS:
            if field not in self.lower or field not in self.upper:
                raise DomainError(f"ParameterBounds: Missing field {field}")
        self.validate()

    @property
    def N(self):  # pylint: disable=invalid-name
        """Number of genes"""
        return len(self.lower["a"])

    def validate(self):
        """
        Check lower <= upper, positive rates and non-negative delays.

        :return: self
        """
        for field in BOUND_FIELDS:
            lower = numpy.asarray(self.lower[field], dtype=float)
            upper = numpy.asarray(self.upper[field], dtype=float)
            if lower.shape != (self.N,) or upper.shape != (self.N,):
                raise DomainError(
                    f"ParameterBounds: Field {field} needs {self.N} entries"
                )
            bad = numpy.flatnonzero(lower > upper)
            if bad.size:
                raise EmptyIntervalError(
                    f"ParameterBounds: Empty interval for {field} of gene "
                    f"{bad[0]}",
                    gene=int(bad[0]),
                )
            if field in _RATES:
                bad = numpy.flatnonzero(~(lower > 0.0))
                if bad.size:
                    raise NonPositiveRateError(
                        f"ParameterBounds: Lower bound of {field} must be "
                        f"> 0 for gene {bad[0]}",
                        gene=int(bad[0]),
                    )
            elif field in ("tau_r", "tau_p"):
                bad = numpy.flatnonzero(~(lower >= 0.0))
                if bad.size:
                    raise NegativeDelayError(
                        f"ParameterBounds: Lower bound of {field} must be "
                        f">= 0 for gene {bad[0]}",
                        gene=int(bad[0]),
                    )
            elif numpy.any(lower < 0.0):
                raise DomainError(
                    "ParameterBounds: zeta bounds are magnitudes, >= 0"
                )
        return self

    @classmethod
    def around(cls, spec, zeta, rel):
        """
        Box of relative half-width rel around a network.

        :param spec: NetworkSpec
        :param zeta: Hill slopes at its equilibrium
        :param rel: relative half-width, in [0, 1)
        :return: ParameterBounds
        """
        centre = {field: spec.column(field) for field in BOUND_FIELDS[:-1]}
        centre["zeta"] = numpy.abs(numpy.asarray(zeta, dtype=float))
        return cls(
            lower={key: value * (1.0 - rel) for key, value in centre.items()},
            upper={key: value * (1.0 + rel) for key, value in centre.items()},
        )

    def sample(self, rng):
        """
        Draw one parameter set uniformly from the box.

        :param rng: numpy Generator
        :return: dict field -> array of N values
        """
        return {
            field: rng.uniform(
                numpy.asarray(self.lower[field], dtype=float),
                numpy.asarray(self.upper[field], dtype=float),
            )
            for field in BOUND_FIELDS
        }


@dataclasses.dataclass(frozen=True)
class WorstCase:
    """
    Homogeneous worst-case ring and the Hill slopes it carries.

    :param spec: homogeneous NetworkSpec
    :param zeta: |zeta_i| lower bounds, used instead of an equilibrium
    """

    spec: NetworkSpec
    zeta: numpy.ndarray


def worst_case_reduction(bounds, signs, nu=1.0):
    """
    Extreme homogeneous parameters of a box.

    a = max upper a, b = max upper b, c = min lower c, beta = min lower
    beta, delays = min lower delays, |zeta_i| = lower |zeta_i|.

    :param bounds: ParameterBounds
    :param signs: regulation kinds, one per gene
    :param nu: Hill coefficient recorded in the spec
    :return: WorstCase
    """
    bounds.validate()
    if len(signs) != bounds.N:
        raise DomainError(
            f"worst_case_reduction: {len(signs)} regulations for "
            f"{bounds.N} genes"
        )

    def _low(field):
        return float(numpy.min(bounds.lower[field]))

    def _high(field):
        return float(numpy.max(bounds.upper[field]))

    genes = tuple(
        GeneSpec(
            a=_high("a"),
            b=_high("b"),
            c=_low("c"),
            beta=_low("beta"),
            tau_r=_low("tau_r"),
            tau_p=_low("tau_p"),
            regulation=kind,
        )
        for kind in signs
    )
    spec = validate(NetworkSpec(genes=genes, nu=nu))
    zeta = numpy.asarray(bounds.lower["zeta"], dtype=float).copy()
    log.debug(
        "worst_case_reduction: a=%.6g b=%.6g c=%.6g beta=%.6g",
        genes[0].a,
        genes[0].b,
        genes[0].c,
        genes[0].beta,
    )
    return WorstCase(spec=spec, zeta=zeta)
