"""Exception hierarchy shared by the whole toolkit.

Every error carries a short machine-readable ``kind`` used by the service
layer (error payloads) and the CLI (exit codes): data problems exit with 2,
numeric breakdowns with 3, violated internal guarantees with 4.
"""


class LpLabError(Exception):
    """Base class for all toolkit errors."""

    kind = "error"


class DataError(LpLabError):
    """Bad or insufficient input; CLI exit code 2."""

    kind = "data"


class InvalidArgumentError(DataError):
    kind = "invalid-argument"


class InsufficientDataError(DataError):
    kind = "insufficient-data"


class SignalParseError(DataError):
    kind = "parse"


class UnsupportedRootError(DataError):
    """Characteristic root at zero: the recurrence order is overstated."""

    kind = "unsupported-root"


class NumericError(LpLabError):
    """Numeric breakdown; CLI exit code 3."""

    kind = "numeric"


class NumericOverflowError(NumericError):
    kind = "numeric-overflow"


class NumericFailureError(NumericError):
    kind = "numeric-failure"


class IllConditionedError(NumericError):
    kind = "ill-conditioned"


class InternalInvariantError(LpLabError):
    """A computed result violated one of the library's own guarantees; exit code 4."""

    kind = "internal-invariant"
