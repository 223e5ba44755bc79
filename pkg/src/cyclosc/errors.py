"""
Exceptions raised by cyclosc.

Domain errors derive from ValueError, numerical failures from
RuntimeError, so callers that only know the builtin types still work.
"""

__all__ = [
    "CycloscError",
    "DomainError",
    "PositiveCycleError",
    "NonPositiveRateError",
    "NegativeDelayError",
    "BadHillCoefficientError",
    "HeterogeneousSpecError",
    "NoCrossingError",
    "NotApplicableError",
    "UnknownPresetError",
    "EmptyIntervalError",
    "ConvergenceError",
    "IntegrationError",
    "InputFileError",
    "OutputFileError",
]


class CycloscError(Exception):
    """Base class for all cyclosc errors"""


class DomainError(CycloscError, ValueError):
    """
    An argument lies outside the domain of the operation.

    :param message: description, prefixed with the raising function
    :param gene: index of the offending gene, if any
    """

    def __init__(self, message, gene=None):
        super().__init__(message)
        self.gene = gene


class PositiveCycleError(DomainError):
    """Product of regulation signs around the loop is +1"""


class NonPositiveRateError(DomainError):
    """A degradation or synthesis rate is not strictly positive"""


class NegativeDelayError(DomainError):
    """A transcription or translation delay is negative"""


class BadHillCoefficientError(DomainError):
    """Hill data (nu, p0, alpha0) out of range"""


class HeterogeneousSpecError(DomainError):
    """Degradation rates differ between genes"""


class NoCrossingError(DomainError):
    """The gain curve never reaches the requested level"""


class NotApplicableError(DomainError):
    """The criterion does not apply to these inputs"""


class UnknownPresetError(DomainError):
    """No preset with the given name"""


class EmptyIntervalError(DomainError):
    """A parameter interval has lower > upper"""


class ConvergenceError(CycloscError, RuntimeError):
    """An iterative solver ran out of its iteration budget"""


class IntegrationError(CycloscError, RuntimeError):
    """
    Numerical integration produced a non-finite state.

    :param message: description
    :param last_valid_time: last time at which the state was finite
    """

    def __init__(self, message, last_valid_time=None):
        super().__init__(message)
        self.last_valid_time = last_valid_time


class InputFileError(CycloscError, OSError):
    """An input file is missing, unreadable or not parseable"""


class OutputFileError(CycloscError, OSError):
    """An output file cannot be created or written"""
