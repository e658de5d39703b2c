"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Bad constructor parameter: size out of range, vertex out of range."""


class Graph6Error(ValueError):
    """Malformed graph6 text: bad length, byte out of range, trailing garbage."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph (distances are undefined otherwise)."""


class InvalidPartitionError(ValueError):
    """Cells do not form a partition of the matrix index set."""


class InvalidSpecError(ValueError):
    """Family or claim-cell parameters are inconsistent."""


class InvalidQueryError(ValueError):
    """Property query outside the supported parameter range (e.g. d >= k)."""


class ParityError(ValueError):
    """Query whose order/parity precondition fails; a hard error, never 'false'."""


class OrderCapError(ValueError):
    """Graph order exceeds the exhaustive-search cap for this operation."""


class BudgetExceededError(RuntimeError):
    """Search exceeded its node budget or structural size limits."""


class EmptyCandidateError(ValueError):
    """A minimizer search found no graph lacking the property."""


class ConvergenceError(RuntimeError):
    """Eigensolver hit its iteration cap; carries the best estimate found."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
