"""
Exception hierarchy for majindex.

Library functions raise these; only the CLI turns them into
``Error: ...`` messages and exit codes.
"""


class MajIndexError(ValueError):
    """Base class for every error raised by the package."""


class InvalidShapeError(MajIndexError):
    """A partition or block diagonal shape violates its invariants or grammar."""


class NonExactDivisionError(MajIndexError):
    """Polynomial division left a nonzero remainder."""


class EnumerationCapError(MajIndexError):
    """A brute-force enumeration was asked for more cells than the cap allows."""


class ZeroVarianceError(MajIndexError):
    """The maj distribution is a point mass, so it cannot be standardized."""


class UnsupportedLawError(MajIndexError):
    """The reference law has no continuous CDF for the requested comparison."""


class ContradictoryLimitError(MajIndexError):
    """Declared limiting behaviors of a shape family cannot hold together."""


class UnsupportedParameterError(MajIndexError):
    """A parameter lies outside the range an operation is defined for."""


class ConfigurationError(MajIndexError):
    """An environment setting cannot be read."""
