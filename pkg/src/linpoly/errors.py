"""Exception hierarchy shared by all modules."""


class LinPolyError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeQ(LinPolyError, ValueError):
    pass


class ReducibleModulus(LinPolyError, ValueError):
    pass


class NoIrreducibleFound(LinPolyError, RuntimeError):
    pass


class FieldTooLarge(LinPolyError, ValueError):
    pass


class DivisionByZero(LinPolyError, ZeroDivisionError):
    pass


class DivisionByZeroPoly(DivisionByZero):
    pass


class ContextMismatch(LinPolyError, ValueError):
    pass


class AutomorphismMismatch(LinPolyError, ValueError):
    pass


class NotNormal(LinPolyError, ValueError):
    pass


class SingularBasis(LinPolyError, ValueError):
    pass


class MissingNormalBasis(LinPolyError, ValueError):
    pass


class DegreeTooLarge(LinPolyError, ValueError):
    pass


class ShapeMismatch(LinPolyError, ValueError):
    pass


class EmptyInput(LinPolyError, ValueError):
    pass


class DependentAbscissae(LinPolyError, ValueError):
    pass


class InvalidStop(LinPolyError, ValueError):
    pass


class NoSolution(LinPolyError, ValueError):
    pass


class RequiresNormalBasis(LinPolyError, ValueError):
    pass


class RadiusInfeasible(LinPolyError, ValueError):
    pass
