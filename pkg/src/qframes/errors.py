"""Exception hierarchy shared by every qframes module."""


class QFramesError(Exception):
    """Base class for all qframes errors."""


class InvalidInput(QFramesError, ValueError):
    pass


class DimensionMismatch(QFramesError, ValueError):
    pass


class ZeroDivisor(QFramesError, ZeroDivisionError):
    """Raised when inverting the zero quaternion."""


class Singular(QFramesError, ArithmeticError):
    pass


class DependentInput(QFramesError, ValueError):
    pass


class NotHermitian(QFramesError, ValueError):
    pass


class MultiplicityAnomaly(QFramesError, ArithmeticError):
    """Real-embedding eigenvalues failed to group into clusters of four."""


class ConvergenceFailure(QFramesError, ArithmeticError):
    pass


class NotOrthonormal(QFramesError, ValueError):
    pass


class NotRieszBasis(QFramesError, ValueError):
    pass


class DualMismatch(QFramesError, ArithmeticError):
    """The two independent dual computations disagree."""


class NotComplete(QFramesError, ValueError):
    pass


class LowerBoundZero(QFramesError, ValueError):
    pass


class EmptyFamily(InvalidInput):
    pass


class InvalidConfig(QFramesError, ValueError):
    pass


class GenerationFailure(QFramesError, RuntimeError):
    pass


class InconsistentVerdict(QFramesError, AssertionError):
    """Two independent routes to the same decision disagreed."""
