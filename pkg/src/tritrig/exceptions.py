"""Exception and warning types raised by tritrig."""


class TritrigError(Exception):
    """Base class for all library errors."""


class DomainError(TritrigError, ValueError):
    """An angle or parameter lies outside its admissible range."""


class BasisIndexError(TritrigError, IndexError):
    """A basis index does not exist for the requested order."""


class UnsupportedOrderError(TritrigError, ValueError):
    """The operation is only defined for a fixed set of orders."""


class ConfigurationError(TritrigError, ValueError):
    """Inconsistent objects were combined (e.g. mismatched orders)."""


class ConditioningError(TritrigError, ArithmeticError):
    """A least-squares fit did not reach the requested residual."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class SingularSystemError(TritrigError, ArithmeticError):
    """A linear system turned out to be numerically rank deficient."""


class EvaluationSingularityError(TritrigError, ArithmeticError):
    """The denominator of a rational patch vanished."""


class NotRepresentableError(TritrigError, ValueError):
    """A target function could not be reproduced in the requested span."""


class ConditioningWarning(RuntimeWarning):
    """Emitted when a shape parameter makes coefficients overflow-prone."""
