"""Exception hierarchy shared by the library and the CLI."""


class CayleySyncError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(CayleySyncError, ValueError):
    """An argument is outside the documented domain of an operation."""


class MalformedGroupError(InvalidArgumentError):
    """A multiplication table does not describe a group."""


class ResourceLimitError(CayleySyncError, RuntimeError):
    """A computation would exceed a configured size cap."""
