"""Exception hierarchy for the logsymtest package."""


class LogSymTestError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSampleError(LogSymTestError):
    """A data vector does not form a valid positive sample."""


class ParameterError(LogSymTestError):
    """A tuning parameter or distribution parameter is out of range."""


class ConfigurationError(LogSymTestError):
    """A simulation or calibration configuration is unusable."""


class QuadratureError(LogSymTestError):
    """Numerical integration failed to reach the requested tolerance."""

    def __init__(self, message: str, achieved_error: float | None = None):
        super().__init__(message)
        self.achieved_error = achieved_error


class DataFormatError(LogSymTestError):
    """A data file could not be parsed into a positive sample."""
