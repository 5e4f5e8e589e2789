"""Exception hierarchy shared across the package."""


class SinkrankError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(SinkrankError, ValueError):
    """A matrix or label list does not have the declared shape."""


class NonFiniteEntryError(SinkrankError, ValueError):
    """A payoff or probability entry is NaN or infinite."""


class DuplicateLabelError(SinkrankError, ValueError):
    """Strategy labels are not pairwise distinct."""


class IndexOutOfRangeError(SinkrankError, IndexError):
    """A strategy or node index is outside the valid range."""


class NonSquareError(SinkrankError, ValueError):
    """A matrix expected to be square is not."""


class NonBinaryEntryError(SinkrankError, ValueError):
    """An adjacency matrix contains entries other than 0 and 1."""


class NonBinaryResultError(SinkrankError, ValueError):
    """An adjacency reconstruction produced entries other than 0 and 1."""


class InvalidConfigError(SinkrankError, ValueError):
    """A configuration value violates its documented constraints."""


class ExplosionCapError(SinkrankError, ValueError):
    """Strategy enumeration would exceed the configured cap."""


class SingularSystemError(SinkrankError, ArithmeticError):
    """A discounted evaluation system could not be solved reliably."""


class AsymmetryDetectedError(SinkrankError, ValueError):
    """A stochastic game is not symmetric under strategy-role swap."""


class FilterExhaustedError(SinkrankError, RuntimeError):
    """Rejection sampling failed to satisfy the filter within the attempt budget."""

    def __init__(self, message: str, attempts: int) -> None:
        super().__init__(message)
        self.attempts = attempts


class TooLargeError(SinkrankError, ValueError):
    """Input exceeds the size guard of a brute-force routine."""


class GameFileError(SinkrankError, ValueError):
    """A game or stochastic-game file is malformed."""
