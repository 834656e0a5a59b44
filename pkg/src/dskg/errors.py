"""Exception hierarchy shared by all dskg modules."""


class DSKGError(Exception):
    """Base class for every error raised by the library."""


class ValidationError(DSKGError, ValueError):
    """Input parameters violate a documented precondition."""


class DomainError(ValidationError):
    """Argument outside the domain where a function is defined."""


class UnknownPreset(ValidationError):
    pass


class UnsupportedNorm(ValidationError):
    pass


class CFLViolation(ValidationError):
    pass


class OutsideCone(DomainError):
    """Kernel requested at a point not strictly inside a light cone."""


class NumericalError(DSKGError, ArithmeticError):
    """A numerical procedure failed to reach its target accuracy."""


class NonConvergent(NumericalError):
    pass


class IllConditioned(NumericalError):
    """A transformation is unusable for these parameters; use another path."""


class QuadratureFailure(NumericalError):
    pass


class DerivativeFailure(NumericalError):
    pass


class StiffnessFailure(NumericalError):
    pass


class RealnessViolation(NumericalError):
    """A quantity that must be real came out with a large imaginary part."""
