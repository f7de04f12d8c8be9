"""Exception types shared across the package."""


class FseError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(FseError, ValueError):
    """Invalid parameter value or geometry (bad range, dimension mismatch,
    loss rectangle outside the grid, empty support area, ...)."""


class PgmError(FseError, ValueError):
    """Malformed PGM file. Messages carry the byte offset of the problem."""
