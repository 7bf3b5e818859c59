"""Exception hierarchy. Every domain failure derives from ``BentHadError``."""


class BentHadError(Exception):
    """Base class for domain errors (CLI exit code 2)."""


class BadEntry(BentHadError, ValueError):
    pass


class NotHadamard(BentHadError, ValueError):
    pass


class SizeLimit(BentHadError):
    pass


class BadResidueClass(BentHadError, ValueError):
    pass


class NotPrimePower(BentHadError, ValueError):
    pass


class NotSquareOrder(BentHadError, ValueError):
    """Order is not an even perfect square, so no bent sequence can exist."""


class DimensionMismatch(BentHadError, ValueError):
    pass


class EmptyEigenspace(BentHadError):
    """H - 2uI is nonsingular: H has no self-dual bent sequence."""


class DimensionTooLarge(BentHadError):
    pass


class NotBent(BentHadError, ValueError):
    pass


class NotSelfDual(BentHadError, ValueError):
    pass


class SingularMatrix(BentHadError, ValueError):
    pass


class VerificationFailure(BentHadError, AssertionError):
    """A decoded group element failed its defining identity. Indicates a bug."""


class NotSymmetric(BentHadError, ValueError):
    pass


class GroupTooLarge(BentHadError):
    pass


class OrderMismatch(BentHadError, ValueError):
    pass


class ParseError(BentHadError, ValueError):
    pass
