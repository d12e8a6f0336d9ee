"""Exception hierarchy shared by every module."""


class PreAlgError(Exception):
    """Base class for all library errors."""


class DomainMismatch(PreAlgError):
    pass


class DimensionMismatch(PreAlgError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class AmbientMismatch(DimensionMismatch):
    pass


class BaseMismatch(DimensionMismatch):
    pass


class NonFieldDomain(PreAlgError):
    pass


class NotInvertible(PreAlgError):
    pass


class BudgetExceeded(PreAlgError):
    pass


class TwoNotInvertible(PreAlgError):
    pass


class TwoTorsionTarget(PreAlgError):
    pass


class TwoTorsionDomain(PreAlgError):
    pass


class ParamConstraintViolated(PreAlgError):
    pass


class NotAPreMorphism(PreAlgError):
    pass


class NotPreSubalgebra(PreAlgError):
    pass


class NotPreIdeal(PreAlgError):
    pass


class NotIdeal(PreAlgError):
    pass


class KindMismatch(PreAlgError):
    pass


class InvalidPair(PreAlgError):
    pass


class NotIdempotentOfKind(PreAlgError):
    pass


class ParseError(PreAlgError):
    pass
