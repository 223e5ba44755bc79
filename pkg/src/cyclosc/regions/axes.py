"""
Sweep axes: which network quantity a grid coordinate sets, and how.
"""

__all__ = [
    "AXIS_PARAMETERS",
    "AxisSpec",
    "apply_axes",
    "apply_axis",
    "parse_axis",
]

import dataclasses
import math

import numpy

from cyclosc.errors import DomainError
from cyclosc.network.network_model import NetworkSpec
from cyclosc.network.presets import half_life_to_rate

LINEAR = "linear"
LOG10 = "log10"

AXIS_PARAMETERS = (
    "nu",
    "R",
    "alpha",
    "gamma",
    "gamma_inv",
    "alpha0",
    "t_r",
    "t_p",
    "tau",
)
_ALIASES = {
    "R-uniform-scale": "R",
    "tau-uniform-scale": "tau",
    "t_r-halflife": "t_r",
    "t_p-halflife": "t_p",
    "tau_tilde": "tau",
}


@dataclasses.dataclass(frozen=True)
class AxisSpec:
    """
    One grid axis.

    :param parameter: one of AXIS_PARAMETERS
    :param lo: first value
    :param hi: last value, > lo
    :param n: number of grid points, >= 2
    :param scale: "linear" or "log10"
    """

    parameter: str
    lo: float
    hi: float
    n: int
    scale: str = LINEAR

    def __post_init__(self):
        parameter = _ALIASES.get(self.parameter, self.parameter)
        object.__setattr__(self, "parameter", parameter)
        if parameter not in AXIS_PARAMETERS:
            raise DomainError(
                f"AxisSpec: Parameter {self.parameter!r} not known, choose "
                f"from {', '.join(AXIS_PARAMETERS)}"
            )
        if self.scale not in (LINEAR, LOG10):
            raise DomainError(f"AxisSpec: Scale {self.scale!r} not known")
        if not self.lo < self.hi:
            raise DomainError(
                f"AxisSpec: Need lo < hi, got {self.lo}, {self.hi}"
            )
        if self.n < 2:
            raise DomainError(f"AxisSpec: Need n >= 2, got {self.n}")
        if self.scale == LOG10 and not self.lo > 0.0:
            raise DomainError("AxisSpec: Log axes need lo > 0")

    @property
    def is_log(self):
        """True for log10 axes"""
        return self.scale == LOG10

    def values(self):
        """Grid coordinates"""
        if self.is_log:
            return numpy.logspace(
                math.log10(self.lo), math.log10(self.hi), self.n
            )
        return numpy.linspace(self.lo, self.hi, self.n)

    def to_dict(self):
        """JSON-ready dictionary"""
        return dataclasses.asdict(self)


def parse_axis(text):
    """
    Parse "param:lo:hi:n[:log]".

    :param text: axis description
    :return: AxisSpec
    """
    parts = text.split(":")
    if len(parts) not in (4, 5) or (len(parts) == 5 and parts[4] != "log"):
        raise DomainError(
            f"parse_axis: Expected param:lo:hi:n[:log], got {text!r}"
        )
    try:
        lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError as err:
        raise DomainError(f"parse_axis: Bad number in {text!r}") from err
    return AxisSpec(
        parameter=parts[0],
        lo=lo,
        hi=hi,
        n=n,
        scale=LOG10 if len(parts) == 5 else LINEAR,
    )


def _geometric_ratio(spec):
    ratio = numpy.sqrt(
        spec.column("c")
        * spec.column("beta")
        / (spec.column("a") * spec.column("b") * spec.column("p0"))
    )
    return float(numpy.exp(numpy.mean(numpy.log(ratio))))


def _set_tau_tilde(spec, value):
    t_a = 0.5 * (
        1.0 / spec.column("a").mean() + 1.0 / spec.column("b").mean()
    )
    per_gene = spec.column("tau_r") + spec.column("tau_p")
    current = per_gene.mean() / t_a
    if current > 0.0:
        factor = value / current
        return spec.replace_genes(
            tau_r=spec.column("tau_r") * factor,
            tau_p=spec.column("tau_p") * factor,
        )
    half = 0.5 * value * t_a
    return spec.replace_genes(tau_r=half, tau_p=half)


def apply_axis(spec, parameter, value):
    """
    Set one swept quantity in a network.

    nu sets the Hill coefficient; R scales every c_i so that the
    geometric-mean loop ratio equals value; alpha sets every beta_i;
    gamma (gamma_inv) sets b_i = c_i = gamma a_i; alpha0 sets the leak;
    t_r and t_p set degradation rates from half-lives; tau rescales the
    delays to the normalised mean delay value.

    :param spec: NetworkSpec
    :param parameter: one of AXIS_PARAMETERS
    :param value: coordinate
    :return: NetworkSpec
    """
    parameter = _ALIASES.get(parameter, parameter)
    if parameter == "nu":
        return NetworkSpec(genes=spec.genes, nu=value)
    if parameter == "R":
        factor = (value / _geometric_ratio(spec)) ** 2
        return spec.replace_genes(c=spec.column("c") * factor)
    if parameter == "alpha":
        return spec.replace_genes(beta=value)
    if parameter in ("gamma", "gamma_inv"):
        gamma = value if parameter == "gamma" else 1.0 / value
        rates = gamma * spec.column("a")
        return spec.replace_genes(b=rates, c=rates)
    if parameter == "alpha0":
        return spec.replace_genes(alpha0=value)
    if parameter == "t_r":
        return spec.replace_genes(a=half_life_to_rate(value))
    if parameter == "t_p":
        return spec.replace_genes(b=half_life_to_rate(value))
    if parameter == "tau":
        return _set_tau_tilde(spec, value)
    raise DomainError(f"apply_axis: Parameter {parameter!r} not known")


def apply_axes(spec, settings):
    """
    Apply several axis settings; delay rescaling goes last so that it
    sees the final degradation rates.

    :param spec: NetworkSpec
    :param settings: sequence of (parameter, value)
    :return: NetworkSpec
    """
    ordered = sorted(
        settings, key=lambda item: _ALIASES.get(item[0], item[0]) == "tau"
    )
    for parameter, value in ordered:
        spec = apply_axis(spec, parameter, value)
    return spec
