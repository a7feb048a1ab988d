"""Exception types shared across the package."""


class AbsFactError(Exception):
    """Base class for all library errors."""


class NotInvertible(AbsFactError):
    pass


class DivisionByZero(AbsFactError):
    pass


class ZeroPolynomial(AbsFactError):
    pass


class DegreeTooSmall(AbsFactError):
    pass


class ExactDivisionFailed(AbsFactError):
    pass


class NotCoprime(AbsFactError):
    pass


class BadLeadingCoeff(AbsFactError):
    pass


class NotSimpleRoot(AbsFactError):
    pass


class DependentBasis(AbsFactError):
    pass


class NoGoodShift(AbsFactError):
    pass


class Exhausted(AbsFactError):
    pass


class NoPrime(AbsFactError):
    pass


class AmbiguousFactor(AbsFactError):
    pass


class NodeFailure(AbsFactError):
    pass


class EmptySelection(AbsFactError):
    pass


class FullSelectionInvalid(AbsFactError):
    pass
