"""Exception types shared by all modules."""


class DihedraError(ValueError):
    """Base class for errors raised by this package."""


class ArgumentError(DihedraError):
    """An argument is out of range or has the wrong shape."""


class InvariantError(DihedraError):
    """A value violates the invariants of its type."""


class PreconditionError(DihedraError):
    """An operation was called on data that does not meet its precondition."""
