"""Exception types shared across the package."""


class KaralcpError(Exception):
    """Base class for all karalcp errors."""


class NonSquareError(KaralcpError):
    pass


class DimensionMismatchError(KaralcpError):
    pass


class BadIndexSetError(KaralcpError):
    pass


class TooLargeError(KaralcpError):
    pass


class Not2x2Error(KaralcpError):
    pass


class ZeroVectorError(KaralcpError):
    pass


class ZeroMatrixError(KaralcpError):
    pass


class NoGroupInverseError(KaralcpError):
    pass


class QNotNonnegativeError(KaralcpError):
    pass


class EmptyConeError(KaralcpError):
    pass


class PreconditionFailedError(KaralcpError):
    pass


class NotInvertibleMError(PreconditionFailedError):
    pass


class BadUError(PreconditionFailedError):
    pass


class BadInnerProductError(PreconditionFailedError):
    pass


class SingularShiftError(KaralcpError):
    pass


class NotRowStochasticError(PreconditionFailedError):
    pass


class NotSymmetricError(PreconditionFailedError):
    pass


class NotIrreducibleError(PreconditionFailedError):
    pass
