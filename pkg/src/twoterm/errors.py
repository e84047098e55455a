"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class PoleError(DomainError):
    """A Gamma-type pole was hit (e.g. a nonpositive integer lower parameter)."""


class SingularityError(DomainError):
    """The potential is singular at the requested point."""


class NoSuchLevelError(DomainError):
    """The requested quantum number is not a bound state."""


class DegenerateParameterError(DomainError):
    """A ladder coefficient has a vanishing denominator."""


class ConvergenceError(ArithmeticError):
    """A series or quadrature failed to reach its tolerance."""
