"""Exception types shared across the library."""


class LebesgueError(Exception):
    """Base class for all errors raised by this library."""


class UndefinedTail(LebesgueError):
    """A sequence operation needed terms beyond an undefined tail."""


class SpaceMismatch(LebesgueError):
    """Two values built over different finite spaces (or sigma-algebras) were combined."""


class UnknownLabel(LebesgueError):
    """A point label does not belong to the space."""


class NotMeasurable(LebesgueError):
    """A subset or function is not measurable in the given sigma-algebra."""


class NotDisjoint(LebesgueError):
    """A family required to be pairwise disjoint is not."""


class NotNondecreasing(LebesgueError):
    """A family required to be nondecreasing is not."""


class NotDiscrete(LebesgueError):
    """The sigma-algebra does not make every singleton measurable."""


class NotConstantOnAtoms(LebesgueError):
    """Per-point data is not constant on the atoms of the sigma-algebra."""


class MissingValue(LebesgueError):
    """A value attained by the function is missing from the covering list."""


class PreimageNotMeasurable(LebesgueError):
    """Some preimage of a canonical value is not measurable."""


class NegativeValue(LebesgueError):
    """A value required to be nonnegative is negative."""


class NegativeScalar(LebesgueError):
    """A scaling factor required to be nonnegative is negative."""


class ValueNotInCanon(LebesgueError):
    """The given value is not in the canonical value list."""


class InvalidInterval(LebesgueError):
    """Interval endpoints are in the wrong order."""


class InvalidIndex(LebesgueError):
    """An index required to be positive is zero."""


class ParseError(LebesgueError):
    """A spec file line could not be parsed."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class ValidationError(LebesgueError):
    """A parsed spec file references unknown labels or carries illegal values."""
