"""Exception types shared across the package."""


class JwqError(Exception):
    """Base class for all package errors."""


class InvalidArgs(JwqError, ValueError):
    pass


class NotEvaluable(JwqError, ArithmeticError):
    """A coefficient has a pole at the chosen root of unity."""

    def __init__(self, message, where=None):
        super().__init__(message)
        self.where = where


class IndexOutOfRange(JwqError, IndexError):
    pass


class MismatchedStrands(JwqError, ValueError):
    pass


class MismatchedRing(JwqError, ValueError):
    pass


class NotGeneric(JwqError, TypeError):
    pass


class NonRegular(JwqError, ValueError):
    pass


class RangeExceeded(JwqError, ValueError):
    pass


class RenormalizationUndefined(JwqError, ValueError):
    pass


class UnsupportedCase(JwqError, ValueError):
    pass


class TooLarge(JwqError, ValueError):
    pass


class InvalidParams(JwqError, ValueError):
    pass


class NotCentral(JwqError, ValueError):
    pass


class SingularSystem(JwqError, ArithmeticError):
    pass


class NotScalar(JwqError, ArithmeticError):
    pass


class UnknownSuite(JwqError, ValueError):
    pass
