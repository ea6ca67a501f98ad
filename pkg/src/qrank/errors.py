"""Exception types shared across the package.

Validation problems (bad input data, broken preconditions) raise
subclasses of ValidationError.  Requests that would exceed a size cap
raise CapExceeded; the CLI maps the two families to exit codes 1 and 2.
"""


class QrankError(Exception):
    pass


class ValidationError(QrankError, ValueError):
    """Input violates a documented precondition."""


class CapExceeded(QrankError, RuntimeError):
    """Requested object exceeds a configured size cap."""


class NotAPrimePower(ValidationError):
    pass


class UnsupportedOrder(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class TooLarge(CapExceeded):
    pass


class NotADenominator(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NotFeasible(ValidationError):
    pass


class InvalidCollection(ValidationError):
    pass


class CoefficientSum(ValidationError):
    pass


class LatticeMismatch(ValidationError):
    pass


class Overlap(ValidationError):
    pass


class RankMismatch(ValidationError):
    pass


class ZeroCode(ValidationError):
    pass


class UnsupportedShape(ValidationError):
    pass


class HypothesisFail(ValidationError):
    pass
