"""Exception hierarchy shared across the package."""
from __future__ import annotations


class CALError(Exception):
    """Base class for all caldyn errors."""


class InvalidThetaError(CALError):
    """theta must be strictly positive."""


class DegenerateMassError(CALError):
    """mu = 0: the fourth-order equation degenerates; use the gradient-flow mode."""


class DivisionByZeroError(CALError):
    """A predicate requires a nonzero denominator."""


class InvalidRhoError(CALError):
    """Reset-design scale rho must be strictly positive."""


class InvalidEpsilonError(CALError):
    """Latching precision epsilon must be strictly positive."""


class ConfluentRootsError(CALError):
    """Closed-form modal solution requires pairwise distinct characteristic roots."""


class DimensionMismatchError(CALError):
    """Vector arguments do not match the declared dimensions."""


class OutOfRangeError(CALError):
    """A time argument lies outside the schedule horizon."""


class NonFiniteError(CALError):
    """Integration produced a non-finite state (blow-up).

    `time` records the first step at which the state left the finite range.
    """

    def __init__(self, message: str, time: float):
        super().__init__(message)
        self.time = time


class SingularSystemError(CALError):
    """The discrete normal equations are singular at the given step size."""


class ConfigError(CALError):
    """Invalid experiment configuration.

    `field` carries the dotted path of the offending entry when known.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
