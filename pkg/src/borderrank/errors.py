class BorderRankError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(BorderRankError):
    """A tensor file, certificate file or table file is malformed."""


class ConsistencyError(BorderRankError):
    """A certified lower bound exceeds a certified upper bound, or an
    internal structural guarantee was violated. Always a bug or a bad
    input fact, never a tolerance issue."""


class NotApplicable(BorderRankError):
    """A certificate method cannot run on this tensor (for example no
    full-rank slice exists for the commutator bound)."""
