"""Exception types shared across the package."""


class HHError(Exception):
    """Base class for all errors raised by hhquiver."""


class PreconditionError(HHError, ValueError):
    """An input violates a documented precondition (CLI exit code 3)."""


class EndpointMismatch(HHError):
    """Two paths do not compose; the product is zero in the path algebra."""


class NotAcyclic(PreconditionError):
    pass


class NonParallelRelation(PreconditionError):
    pass


class RelationTooShort(PreconditionError):
    pass


class ZeroModule(PreconditionError):
    pass


class GlobalDimensionTooHigh(PreconditionError):
    pass


class NotHereditary(PreconditionError):
    pass


class DimensionCapExceeded(PreconditionError):
    pass


class InvalidWeights(PreconditionError):
    pass


class DuplicatePoints(PreconditionError):
    pass


class ZeroPoint(PreconditionError):
    pass


class NonIntegerGenus(PreconditionError):
    pass
