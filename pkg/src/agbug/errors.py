"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`BugError`,
so callers (the CLI in particular) can separate input problems from bugs.
"""


class BugError(Exception):
    """Base class for all library errors."""


class ZeroInverse(BugError, ZeroDivisionError):
    pass


class NotPrime(BugError, ValueError):
    pass


class ShapeMismatch(BugError, ValueError):
    pass


class RingMismatch(BugError, ValueError):
    pass


class DuplicateVariable(BugError, ValueError):
    pass


class DualProductOverlap(BugError, ValueError):
    """Product of dual forms sharing a variable (divided powers not modelled)."""


class PolySyntaxError(BugError, ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnknownVariable(PolySyntaxError):
    pass


class NotHomogeneous(BugError, ValueError):
    pass


class ZeroForm(BugError, ValueError):
    pass


class NotGorenstein(BugError, ValueError):
    pass


class NotArtinian(BugError, ValueError):
    pass


class IllDefined(BugError, ValueError):
    pass


class OrientationMissing(BugError, ValueError):
    pass


class NotSurjective(BugError, ValueError):
    pass


class NotMonic(BugError, ValueError):
    pass


class WrongDegree(BugError, ValueError):
    pass


class ZeroThomClass(BugError, ValueError):
    pass


class ThomMismatch(BugError, ValueError):
    pass


class DegenerateColon(BugError, ValueError):
    pass


class ConditionFailed(BugError, ValueError):
    def __init__(self, condition, message):
        super().__init__(f"condition {condition} failed: {message}")
        self.condition = condition


class NotFactored(BugError, ValueError):
    pass


class NotRegularSequence(BugError, ValueError):
    pass


class InvalidFan(BugError, ValueError):
    pass


class EnumerationTooLarge(BugError, ValueError):
    pass


class NotSquare(BugError, ValueError):
    pass


class InvariantViolation(BugError, AssertionError):
    """An internal cross-check disagreed. Always a bug or a false theorem."""
