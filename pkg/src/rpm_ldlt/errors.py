"""Exception hierarchy shared by every module of the package."""


class RpmLdltError(Exception):
    """Base class for all errors raised by rpm_ldlt."""


class ZeroInverse(RpmLdltError, ZeroDivisionError):
    pass


class CharTwoDivision(RpmLdltError, ZeroDivisionError):
    pass


class DimensionMismatch(RpmLdltError, ValueError):
    pass


class NotSymmetric(RpmLdltError, ValueError):
    pass


class SingularTriangular(RpmLdltError, ValueError):
    pass


class NonUnitTriangular(RpmLdltError, ValueError):
    pass


class CharTwoNonzeroDiagonal(RpmLdltError, ValueError):
    """Raised when X^T U + U^T X = C has no solution over a field of characteristic 2."""


class WrongCharacteristic(RpmLdltError, ValueError):
    pass


class BadBlockSizes(RpmLdltError, ValueError):
    pass


class BadRank(RpmLdltError, ValueError):
    pass


class NonpositiveTime(RpmLdltError, ValueError):
    pass


class OracleMismatchExhausted(RpmLdltError, RuntimeError):
    pass


class ParseError(RpmLdltError, ValueError):
    pass
