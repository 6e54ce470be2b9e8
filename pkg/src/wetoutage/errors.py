"""Exception types shared across the package."""


class WetError(Exception):
    """Base class for all package errors."""


class DomainError(WetError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class FormulaInvalidError(WetError):
    """A closed form was requested outside its stated range of validity.

    The protocol-level simulator remains available for such points.
    """


class IllConditionedError(WetError):
    """The requested closed form is numerically explosive at this point."""


class NoClosedFormError(WetError):
    """The scenario has no analytic outage expression (simulation only)."""


class NumericalError(WetError, ArithmeticError):
    """A numerical procedure failed to reach its accuracy contract."""
