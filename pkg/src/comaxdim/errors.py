"""Exception hierarchy shared by every module of the toolkit."""


class ComaxError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 10


class SpecParseError(ComaxError, ValueError):
    exit_code = 2


class SpecMismatchError(ComaxError, ValueError):
    """Two ideals from different rings were combined."""

    exit_code = 2


class EmptyGraphError(ComaxError):
    """The requested graph has no vertices (e.g. a local ring)."""

    exit_code = 3


class CapExceededError(ComaxError):
    """A configured size cap would be exceeded; no approximation is attempted."""

    exit_code = 4


class DisconnectedGraphError(ComaxError):
    exit_code = 5


class GraphFormatError(ComaxError, ValueError):
    """Unreadable or malformed graph input."""

    exit_code = 6
