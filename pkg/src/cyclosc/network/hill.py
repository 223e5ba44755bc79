"""
Hill nonlinearities for transcriptional repression and activation.
"""

__all__ = [
    "ACTIVATE",
    "REPRESS",
    "REGULATIONS",
    "hill_derivative",
    "hill_eval",
    "regulation_sign",
]

import math

import numpy
from scipy import special

from cyclosc.errors import BadHillCoefficientError, DomainError

REPRESS = "repress"
ACTIVATE = "activate"
REGULATIONS = (REPRESS, ACTIVATE)


def regulation_sign(kind):
    """
    Sign of the Hill slope for a regulation kind.

    :param kind: "repress" or "activate"
    :return: -1 for repression, +1 for activation
    """
    if kind == REPRESS:
        return -1
    if kind == ACTIVATE:
        return 1
    raise DomainError(f"regulation_sign: Regulation {kind!r} not known")


def _check_hill_domain(name, kind, p, nu, p0):
    if kind not in REGULATIONS:
        raise DomainError(f"{name}: Regulation {kind!r} not known")
    if not nu >= 1.0:
        raise BadHillCoefficientError(
            f"{name}: Hill coefficient must be >= 1, got {nu}"
        )
    if not p0 > 0.0:
        raise BadHillCoefficientError(
            f"{name}: Half-saturation scale must be > 0, got {p0}"
        )
    p = numpy.asarray(p, dtype=float)
    if numpy.any(~(p >= 0.0)):
        raise DomainError(f"{name}: Protein level must be >= 0")
    return p


def _hill_parts(p, nu, p0):
    """
    Activation and repression values plus the slope magnitude.

    The logistic form keeps everything finite for very large p.
    """
    x = p / p0
    with numpy.errstate(divide="ignore"):
        log_x = numpy.log(x)
    up = special.expit(nu * log_x)
    down = special.expit(-nu * log_x)
    with numpy.errstate(divide="ignore", invalid="ignore"):
        slope = numpy.where(x > 0.0, nu * up * down / (x * p0), 0.0)
    if nu == 1.0:
        slope = numpy.where(x > 0.0, slope, 1.0 / p0)
    return up, down, slope


def _hill_scalar(p, nu, p0):
    """Scalar version of _hill_parts, the hot path of the loop solvers"""
    x = p / p0
    if x == 0.0:
        return 0.0, 1.0, (1.0 / p0 if nu == 1.0 else 0.0)
    exponent = nu * math.log(x)
    if exponent >= 0.0:
        tail = math.exp(-exponent)
        up, down = 1.0 / (1.0 + tail), tail / (1.0 + tail)
    else:
        tail = math.exp(exponent)
        up, down = tail / (1.0 + tail), 1.0 / (1.0 + tail)
    return up, down, nu * up * down / (x * p0)


def _as_output(array):
    if array.ndim == 0:
        return float(array)
    return array


def hill_eval(kind, p, nu, p0=1.0):
    """
    Evaluate a Hill function and its derivative.

    Repression is 1/(1+(p/p0)^nu), activation (p/p0)^nu/(1+(p/p0)^nu).
    The derivative is analytic; at p = 0 it is 1/p0 (activation, nu = 1)
    or 0 (nu > 1).

    :param kind: "repress" or "activate"
    :param p: protein level(s), >= 0; scalar or array
    :param nu: Hill coefficient, >= 1
    :param p0: half-saturation scale, > 0
    :return: (value, derivative), each shaped like p
    """
    p = _check_hill_domain("hill_eval", kind, p, nu, p0)
    if p.ndim == 0:
        up, down, slope = _hill_scalar(float(p), float(nu), float(p0))
        if kind == REPRESS:
            return down, -slope
        return up, slope
    up, down, slope = _hill_parts(p, nu, p0)
    if kind == REPRESS:
        return _as_output(down), _as_output(-slope)
    return _as_output(up), _as_output(slope)


def hill_derivative(kind, p, nu, p0=1.0):
    """
    Analytic derivative of a Hill function with respect to p.

    :param kind: "repress" or "activate"
    :param p: protein level(s), >= 0
    :param nu: Hill coefficient, >= 1
    :param p0: half-saturation scale, > 0
    :return: derivative, shaped like p
    """
    return hill_eval(kind, p, nu, p0)[1]
