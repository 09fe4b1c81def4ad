"""
Runtime configuration.

Values come from the process environment, optionally seeded from a
``.env`` file in the working directory.
"""

import logging
import os

from dotenv import load_dotenv

from .errors import ConfigurationError

load_dotenv()

DEFAULT_ENUM_CAP = 16
DEFAULT_PRECISION = 50
DEFAULT_LOG_LEVEL = 'WARNING'
DEFAULT_WORKERS = 1


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"Error: {name} must be an integer, got {raw!r}")


def enumeration_cap():
    """Maximum number of cells for brute-force tableau enumeration."""
    return _int_setting('MAJINDEX_ENUM_CAP', DEFAULT_ENUM_CAP)


def precision():
    """Decimal digits used for standardization and reference-law CDFs."""
    return _int_setting('MAJINDEX_PRECISION', DEFAULT_PRECISION)


def log_level():
    level = os.getenv('MAJINDEX_LOG_LEVEL', DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigurationError(f"Error: MAJINDEX_LOG_LEVEL must be a logging level name, got {level!r}")
    return level


def workers():
    return max(1, _int_setting('MAJINDEX_WORKERS', DEFAULT_WORKERS))


def resolve_cap(cap):
    """Return ``cap`` if given, otherwise the configured enumeration cap."""
    return enumeration_cap() if cap is None else cap
