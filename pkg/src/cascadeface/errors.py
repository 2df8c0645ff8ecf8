"""Exception hierarchy shared by all cascadeface modules."""


class CascadeFaceError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(CascadeFaceError):
    """Tensor/map extents do not satisfy an operation's contract."""


class UsageError(CascadeFaceError):
    """Caller violated a precondition (bad argument, wrong object kind)."""


class ParseError(CascadeFaceError):
    """Malformed input file. Carries a byte offset or line number."""

    def __init__(self, message, *, offset=None, line=None):
        loc = []
        if offset is not None:
            loc.append(f"byte {offset}")
        if line is not None:
            loc.append(f"line {line}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class DataError(CascadeFaceError):
    """Semantically invalid data (unknown class label, duplicate id, ...)."""


class TrainingError(CascadeFaceError):
    """Boosting could not make progress (no weak learner beats chance)."""
