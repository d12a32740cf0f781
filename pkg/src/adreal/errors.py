"""Exception hierarchy.

Every refusal the library makes is one of these, so callers (and the CLI's
exit-code mapping) can tell input problems from exactness refusals from
negative mathematical verdicts.
"""


class AdRealError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AdRealError, ValueError):
    """A scalar string or JSON document could not be parsed."""


class DimensionError(AdRealError, ValueError):
    """Matrix shapes or fields do not fit the requested operation."""


class SingularMatrixError(AdRealError, ArithmeticError):
    pass


class BoundExceeded(AdRealError, ValueError):
    pass


class ExactnessRefusal(AdRealError):
    """The exact answer leaves the supported scalar tower."""


class NonSplittingSpectrum(ExactnessRefusal):
    """Some eigenvalue does not lie in Q(i)."""


class RootNotRepresentable(ExactnessRefusal):
    pass


class DefectiveHint(AdRealError, ValueError):
    """A user-supplied spectrum hint is not an eigenvalue."""


class DoublingViolation(AdRealError, AssertionError):
    """The Phi image of a quaternionic matrix broke the conjugate-pair structure.

    This can only happen through an internal bug; it is checked rather than
    assumed.
    """


class NotInSl(AdRealError, ValueError):
    """Input matrix has nonzero trace (it is not in sl(n, F))."""


class NoWitness(AdRealError):
    """No certificate of the requested kind exists.

    ``reason`` carries the obstruction (a :class:`adreal.reality.Reason` value).
    """

    def __init__(self, reason, message=""):
        self.reason = reason
        super().__init__(message or str(reason))


class ShapePreconditionError(AdRealError, ValueError):
    pass
