"""Exception hierarchy shared by the library and the CLI.

Each class carries the process exit code the CLI uses when it escapes a
command handler.
"""


class PlatforgeError(Exception):
    exit_code = 1


class MalformedInputError(PlatforgeError, ValueError):
    """Unparseable or out-of-range user input."""

    exit_code = 2


class BraidParseError(MalformedInputError):
    pass


class DomainError(PlatforgeError, ValueError):
    """Input is well formed but outside the operation's domain."""

    exit_code = 2


class DimensionError(DomainError):
    pass


class ResourceLimitError(PlatforgeError):
    exit_code = 3


class InconsistencyError(PlatforgeError):
    """Two independent computations disagreed, or an internal invariant broke."""

    exit_code = 4
