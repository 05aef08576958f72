"""Exception types shared across the package."""


class ColouredHopfError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ColouredHopfError, ValueError):
    pass


class NonConvergence(ColouredHopfError, ArithmeticError):
    pass


class Singular(ColouredHopfError, ArithmeticError):
    pass


class ZeroColour(ColouredHopfError, ValueError):
    pass


class UnknownGenerator(ColouredHopfError, KeyError):
    pass


class InvalidSpin(ColouredHopfError, ValueError):
    pass


class InvalidParameter(ColouredHopfError, ValueError):
    pass
