"""Exception types shared across the package."""


class MillsError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MillsError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class EnvelopeError(DomainError):
    """Argument outside the supported evaluation envelope (|x| <= 30)."""


class SingularityError(MillsError, ArithmeticError):
    """Denominator indistinguishable from zero at the working precision."""


class IdentityError(MillsError, AssertionError):
    """An exact algebraic identity failed; indicates an arithmetic bug."""
