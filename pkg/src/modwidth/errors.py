"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Input exceeds a configured size cap (oracles, partition solver)."""


class ParseError(ValueError):
    """Malformed graph file. ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """The ILP search ran past its node budget."""


class InternalError(AssertionError):
    """An invariant that the algorithms guarantee was violated."""
