"""Exception types shared across the package."""


class CfdedError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroDenominator(CfdedError):
    pass


class DivisionByZero(CfdedError):
    pass


class PerfectSquare(CfdedError):
    """The radicand reduces to a perfect square, so the value is rational."""


class MixedRadicand(CfdedError):
    """Two surds over different (squarefree) radicands were combined."""


class RationalValue(CfdedError):
    """A surd was required but the value has no irrational part."""


class NotCoprime(CfdedError):
    pass


class EmptyInput(CfdedError):
    pass


class IndexOutOfRange(CfdedError):
    pass


class IndexBeforePeriod(CfdedError):
    pass


class InvalidPeriod(CfdedError):
    pass


class NotBounded(CfdedError):
    pass


class NotFound(CfdedError):
    """Contract violation: a ceiling convergent matched no ladder entry."""


class ToleranceNotReached(CfdedError):
    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class InternalInvariant(CfdedError):
    """An invariant guaranteed by theory failed; signals a bug, not bad input."""


class SurdSyntaxError(CfdedError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
