"""Exception hierarchy shared by the whole package.

Everything raised on purpose derives from :class:`EtherdriftError`, so the
command line driver can map library failures to a single exit code without
catching bare ``Exception``.
"""


class EtherdriftError(Exception):
    """Base class for all errors raised by etherdrift."""


class DomainError(EtherdriftError, ValueError):
    """A physical argument is outside the domain of the formula."""


class DimensionError(EtherdriftError, TypeError):
    """Quantities with incompatible dimensions were combined."""


class InputError(EtherdriftError, ValueError):
    """Malformed user input (config files, CLI payloads)."""


class SingularPathError(EtherdriftError, ValueError):
    """An integration path touches a field singularity."""


class DegenerateConfigError(EtherdriftError, ValueError):
    """A geometry or run configuration is degenerate (zero-size, crossing)."""


class SeriesOverflowError(EtherdriftError, OverflowError):
    """A series evaluation left the range where it is reliable."""


class ConvergenceError(EtherdriftError, RuntimeError):
    """An iterative or quadrature routine failed to converge."""
