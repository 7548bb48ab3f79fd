"""Exception types shared across the package.

The CLI maps these onto exit codes: usage errors exit 1, InputError/DataError
exit 2, NumericalError exit 3.
"""


class InputError(ValueError):
    """Invalid argument or precondition violation."""


class DataError(InputError):
    """Malformed or unusable input data (files, rows, schemas)."""


class NumericalError(RuntimeError):
    """A numerical routine failed to reach its tolerance or to converge."""
