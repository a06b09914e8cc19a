"""Exception types raised across the package."""


class PPError(Exception):
    """Base class for all errors raised by ppinv."""


class NotPrime(PPError, ValueError):
    pass


class SizeExceeded(PPError, ValueError):
    pass


class SpecMismatch(PPError, ValueError):
    """Operands belong to different fields."""


class DivisionByZero(PPError, ZeroDivisionError):
    pass


class NotADivisor(PPError, ValueError):
    pass


class ZeroInput(PPError, ValueError):
    pass


class DuplicatePoint(PPError, ValueError):
    pass


class IncompleteDomain(PPError, ValueError):
    pass


class NotAPermutation(PPError, ValueError):
    pass


class NonzeroConstantTerm(PPError, ValueError):
    pass


class FieldTooSmall(PPError, ValueError):
    pass


class NotCoprime(PPError, ValueError):
    pass


class ZeroLeadingCoefficient(PPError, ValueError):
    pass


class ConsistencyFailure(PPError, AssertionError):
    """An internal cross-check disagreed. Indicates a bug, not bad input."""


class CharacteristicDividesD(PPError, ValueError):
    pass


class OutOfRange(PPError, ValueError):
    pass


class EvenIndex(PPError, ValueError):
    pass


class DenominatorZero(PPError, ArithmeticError):
    pass


class MethodInapplicable(PPError, ValueError):
    pass


class ParseError(PPError, ValueError):
    pass
