"""Exception types shared across the package."""


class SocDisjError(Exception):
    """Base class for all errors raised by socdisj."""


class InvalidInputError(SocDisjError, ValueError):
    """Malformed numeric input (non-finite entries, bad exponent, bad shape)."""


class InvalidInstanceError(InvalidInputError):
    """A disjunction that cannot be normalized (zero or mismatched coefficients)."""


class AssumptionViolation(SocDisjError, ValueError):
    """The instance fails non-containment or strict feasibility; no cuts are produced."""


class InvalidArgumentError(SocDisjError, ValueError):
    """An operation was called outside its precondition (e.g. a beta off the cone boundary)."""


class DomainError(SocDisjError, ValueError):
    """A point lies outside the domain on which a formula is defined."""


class NumericalFailure(SocDisjError, ArithmeticError):
    """A quantity that is provably nonnegative came out clearly negative."""


class NoCertificateError(SocDisjError):
    """A requested direction does not generate a member of the linear inequality family."""


class UnsupportedInstanceError(SocDisjError, ValueError):
    """Instance shape outside what the closed forms cover (e.g. general disjunctions on p-cones)."""
