"""Exception types raised by chord_census.

Everything derives from :class:`ChordCensusError`, so callers can catch the
whole family with one clause.  Input-validation errors additionally derive
from :class:`ValueError`; the two arithmetic sentinels derive from
:class:`ArithmeticError` because they flag implementation bugs rather than
bad inputs.
"""

from __future__ import annotations


class ChordCensusError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGluingError(ChordCensusError, ValueError):
    """A set of point pairs does not describe a valid gluing."""


class DuplicateIndexError(InvalidGluingError):
    """Some point index appears in more than one pair."""


class MissingIndexError(InvalidGluingError):
    """The pairs do not cover {1..2n} exactly."""


class SelfPairError(InvalidGluingError):
    """A pair joins a point to itself."""


class GluingParseError(InvalidGluingError):
    """Malformed gluing text or JSON."""


class SizeMismatchError(ChordCensusError, ValueError):
    """Two diagrams of different order were compared."""


class InvalidSpinError(ChordCensusError, ValueError):
    """A spin graph violates the pairing or alternation rules."""


class EvenInputError(ChordCensusError, ValueError):
    """double_factorial was called with an even argument."""


class NonDivisorError(ChordCensusError, ValueError):
    """A fixed-point formula was called outside its divisor domain."""


class NotPrimeError(ChordCensusError, ValueError):
    """A prime-only shortcut was called with a non-prime (or p < 3)."""


class DivisibilityError(ChordCensusError, ArithmeticError):
    """A Burnside sum was not divisible by the group order.

    This cannot happen for correct formulas; it signals a bug, never a bad
    input, and is raised instead of silently rounding.
    """


class InconsistentTopologyError(ChordCensusError, ArithmeticError):
    """The genus equation had no admissible integer solution (a bug sentinel)."""


class BudgetExceededError(ChordCensusError, RuntimeError):
    """A brute-force run would enumerate more gluings than the work budget."""
