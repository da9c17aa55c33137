"""Exception types shared by the library and the command line."""


class CosegalError(Exception):
    """Base class for library errors."""


class InputError(CosegalError, ValueError):
    """Malformed or out-of-range input (exit code 2 on the command line)."""


class PreconditionError(CosegalError):
    """A semantic precondition does not hold (exit code 1)."""


class ConvergenceError(CosegalError):
    """An iteration exceeded its cap; carries the partial trace if any."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
