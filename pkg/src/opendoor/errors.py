"""Exception types shared across the library."""


class OpenDoorError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(OpenDoorError, ValueError):
    """A constructed parameter value violates its invariants."""


class DomainError(OpenDoorError, ValueError):
    """An evaluation point lies outside the operation's domain."""


class EvaluationError(OpenDoorError, ArithmeticError):
    """Evaluation hit a pole or an otherwise indeterminate value."""


class ConvergenceError(OpenDoorError, RuntimeError):
    """An iterative solver failed to reach its tolerance."""


class IndeterminateError(OpenDoorError, RuntimeError):
    """A query point sits too close to a sampled curve to classify."""
