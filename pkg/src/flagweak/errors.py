"""Exception types shared across the package."""


class FlagWeakError(Exception):
    """Base class for all library errors."""


class CapExceededError(FlagWeakError):
    """A requested computation is larger than the configured cap."""


class ContextMismatchError(FlagWeakError):
    """Operands live in different groups."""


class ParseError(FlagWeakError, ValueError):
    """An element string does not parse under the grammar."""


class NotComparableError(FlagWeakError):
    """The given endpoints are not related by the order."""
