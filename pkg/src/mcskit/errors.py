"""Exception hierarchy shared by the library, CLI, and service."""


class McskitError(Exception):
    """Base class for all errors raised by this package."""


class InputError(McskitError):
    """Invalid operands: bad vertex ids, empty subsets, malformed values."""


class FormatError(InputError):
    """A text-format document could not be parsed or failed validation."""


class DisconnectedGraphError(InputError):
    """An operation that requires a connected graph received a disconnected one."""


class GuardExceededError(McskitError):
    """A brute-force solver was asked to run above its size guard."""


class NoCoverError(McskitError):
    """The cover search terminated without an accepted chain."""
