"""Exception types shared across the package."""


class ThrfixError(Exception):
    """Base class for errors raised by thrfix."""


class InputError(ThrfixError, ValueError):
    """Unsupported or malformed input (CLI exit code 2)."""


class CrossCheckError(ThrfixError, AssertionError):
    """Two independent computations disagree, or a proof-level invariant
    failed at runtime (CLI exit code 3). Always a bug, never expected."""
