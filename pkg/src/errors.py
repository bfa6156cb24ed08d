"""
File: errors.py
Description: Exceptions raised by the walk engine, analysis and Monte Carlo code.
"""


class WalkError(ValueError):
    """Base class; main.py maps it to a non-zero exit status."""


class LatticeSizingError(WalkError):
    """Amplitude would leave the finite lattice."""


class StepCapError(WalkError):
    """Step count outside [1, MAX_STEPS]."""


class DegenerateSeriesError(WalkError):
    """Series cannot support the requested fit (too short or zero variance)."""


class AngleParseError(WalkError):
    pass


class SeriesFormatError(WalkError):
    """Malformed `t,mean,variance` file."""


class ConfigError(WalkError):
    pass
