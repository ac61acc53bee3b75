"""Exception hierarchy and process exit codes.

Every error raised by this package derives from :class:`DefTracerError` and
carries the exit code the command-line front end should terminate with.
"""

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_INSUFFICIENT = 3


class DefTracerError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = EXIT_DATA


class ConfigurationError(DefTracerError):
    """Invalid parameter value or unusable parameter combination."""

    exit_code = EXIT_CONFIG


class IngestionError(DefTracerError):
    """Dataset file is malformed, inconsistent, or incomplete."""


class AlignmentError(DefTracerError):
    """Series that must share one uniform time base do not."""


class DataQualityError(DefTracerError):
    """Non-finite samples or otherwise unusable recorded values."""


class RangeError(DefTracerError):
    """Requested time span lies outside the recorded span."""


class InsufficientDataError(DefTracerError):
    """Recording is too short for the requested operation."""

    exit_code = EXIT_INSUFFICIENT


class ReferenceEstimationError(DefTracerError):
    """Fundamental component too weak to anchor the rotating reference."""


class ScenarioError(ConfigurationError):
    """Synthetic scenario is inconsistent or yields a singular network."""


class StageDependencyError(ConfigurationError):
    """A pipeline stage was invoked before its prerequisite stage."""
