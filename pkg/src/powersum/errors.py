"""Shared error types, input guards, and the resource ceiling.

The ceiling protects interactive users from accidentally huge
requests; it can be raised or lowered through the POWERSUM_CEILING
environment variable, up to a hard limit of 10000.
"""

import os

DEFAULT_CEILING = 1000
MAX_CEILING = 10000

_ENV_VAR = "POWERSUM_CEILING"


class DomainError(ValueError):
    """A formula was requested outside the exponent range where it holds."""


class CeilingError(ValueError):
    """A size argument exceeded the configured resource ceiling."""


def check_natural(name: str, value: int) -> None:
    """Reject anything that is not a nonnegative Python int.

    Floats are refused even when integral; letting one in would silently
    poison the exact arithmetic downstream.
    """
    if not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")


def effective_ceiling() -> int:
    """Current kmax ceiling: the POWERSUM_CEILING override if set, else 1000."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_VAR} must be an integer, got {raw!r}") from None
    if not 0 <= value <= MAX_CEILING:
        raise ValueError(f"{_ENV_VAR} must be between 0 and {MAX_CEILING}, got {value}")
    return value


def check_ceiling(kmax: int) -> None:
    """Refuse kmax values above the configured ceiling."""
    ceiling = effective_ceiling()
    if kmax > ceiling:
        raise CeilingError(f"kmax={kmax} exceeds the resource ceiling of {ceiling}")
