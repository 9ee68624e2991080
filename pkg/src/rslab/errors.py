"""Exception taxonomy shared by every module.

The command-line front end maps these onto process exit codes
(argument/config 2, data 3, resource 4, numeric 5).
"""


class RSLabError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ArgumentError(RSLabError, ValueError):
    """Invalid argument or configuration (precondition violated)."""

    exit_code = 2


class DomainError(ArgumentError):
    """Input outside the mathematical domain of an operation
    (e.g. a prime excluded by the ramification set)."""


class PoleError(ArgumentError):
    """Evaluation requested exactly at a pole."""


class DataError(RSLabError, ValueError):
    """Malformed or missing external data (tables, files)."""

    exit_code = 3


class ResourceError(RSLabError, RuntimeError):
    """A configured capacity (sieve limit, coefficient cutoff) was exceeded."""

    exit_code = 4


class NumericError(RSLabError, ArithmeticError):
    """A numerical routine failed to converge or lost control of its error."""

    exit_code = 5
