"""Exception hierarchy shared by the exact and numeric layers."""


class HypersumError(Exception):
    """Base class for every error raised by this package."""

    #: short machine-readable tag used by the command line front end
    kind = "error"


class DomainError(HypersumError, ValueError):
    """A parameter violates the validity condition of an operation."""

    kind = "domain"


class PoleError(DomainError):
    """A gamma function was requested at a non-positive integer."""

    kind = "pole"


class NonInvertibleError(HypersumError, ZeroDivisionError):
    """Division by an exact value that has no inverse in the ring."""

    kind = "non_invertible"


class DivergentError(HypersumError, ValueError):
    """The requested series does not converge."""

    kind = "divergent"


class BudgetExceededError(HypersumError):
    """The term budget ran out before the target accuracy was reached.

    ``best`` holds the most accurate estimate obtained, if any.
    """

    kind = "budget_exceeded"

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class NumericalBreakdownError(HypersumError, ArithmeticError):
    """An extrapolation table hit a zero or vanishing denominator."""

    kind = "breakdown"


class PrecisionTooLowError(HypersumError):
    """Working precision is too low to certify an integer relation."""

    kind = "precision"
