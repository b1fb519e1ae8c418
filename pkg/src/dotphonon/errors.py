"""Exception types raised by the library.

Everything derives from :class:`DotPhononError` so callers can catch the
whole family at once; the CLI maps subfamilies onto exit codes.
"""


class DotPhononError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(DotPhononError, ValueError):
    """A parameter object was constructed with out-of-domain values."""


class NonFinite(InvalidParams):
    """A matrix entry or parameter is NaN or infinite."""


class DegenerateLevels(DotPhononError):
    """The two lowest levels are degenerate; qubit quantities are undefined."""


class NonPositiveQubitEnergy(DotPhononError):
    """A relaxation rate was requested for a non-positive level splitting."""


class NegativeFrequency(DotPhononError, ValueError):
    """The spectral density is only defined for non-negative frequencies."""


class ZeroFrequency(DotPhononError, ValueError):
    """The finite-frequency power spectrum was evaluated at omega = 0."""


class NonPositiveFrequency(DotPhononError, ValueError):
    """Thermal occupation requires a strictly positive frequency."""


class InvalidDiscretization(DotPhononError, ValueError):
    """A discrete bath was requested with too few modes or range."""


class WindowTooShort(DotPhononError, ValueError):
    """The Fourier window cannot resolve the requested frequency grid."""


class InvalidAxis(DotPhononError, ValueError):
    """A sweep axis has an unknown name or an out-of-domain range."""


class EmptyGrid(DotPhononError, ValueError):
    """A sweep was requested without any axes."""


class InsufficientData(DotPhononError, ValueError):
    """Not enough (or degenerate) points for the requested regression."""


class NotA2DSweep(DotPhononError, ValueError):
    """Ridge detection needs a two-dimensional detuning/splitting sweep."""


class ConfigError(DotPhononError, ValueError):
    """A run configuration (file or flags) failed validation."""
