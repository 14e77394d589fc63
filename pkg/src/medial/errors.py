"""Exception hierarchy shared by every module."""


class MedialError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(MedialError):
    """Malformed DSL text. ``offset`` is the byte offset of the failure."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class TypeMismatch(MedialError):
    def __init__(self, expected, found, position=None):
        where = "" if position is None else f" at byte {position}"
        super().__init__(f"type mismatch{where}: expected {expected}, found {found}")
        self.expected = expected
        self.found = found
        self.position = position


class SizeMismatch(MedialError):
    pass


class ArityMismatch(MedialError):
    pass


class IndexOutOfRange(MedialError):
    pass


class UnitNotAllowed(MedialError):
    pass


class MissingBinding(MedialError):
    pass


class UnsatisfiableIndices(MedialError):
    pass


class DialectMismatch(MedialError):
    pass


class BudgetExceeded(MedialError):
    def __init__(self, budget, reached=None):
        msg = f"closure budget of {budget} elements exceeded"
        if reached is not None:
            msg += f" (expected order {reached})"
        super().__init__(msg)
        self.budget = budget
        self.reached = reached
