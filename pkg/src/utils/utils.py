"""
File: utils.py
Description: Angle literals, parameter grids, number formatting and progress bars.
"""

import math
import re
from collections.abc import Iterable, Iterator
from typing import TypeVar

import numpy as np
from tqdm import tqdm

from errors import AngleParseError, ConfigError
from utils.logging_config import progress_enabled

T = TypeVar("T")

# [+-][k[*]]pi[/n]  e.g. "pi/4", "-pi/2", "3pi/4", "0.5*pi"
_PI_FRACTION = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?:(?P<k>\d+(?:\.\d*)?)\s*\*?\s*)?pi\s*(?:/\s*(?P<n>\d+))?\s*$",
    re.IGNORECASE,
)


def clamp(value: float, min_value: float, max_value: float) -> float:
    """Clamp a value between a minimum and maximum."""
    return max(min_value, min(value, max_value))


def parse_angle(text: str | float) -> float:
    """
    Parse an angle in radians.

    Accepts plain reals ("0.7853981633974483") and fractions of pi ("pi/4",
    "3*pi/4", "-pi"). Fractions are evaluated as (k * pi) / n so that "pi/4" and
    "pi/2" come out bit-identical to math.pi / 4 and math.pi / 2.
    """
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        match = _PI_FRACTION.match(text)
        if match:
            k = float(match.group("k") or 1.0)
            n = int(match.group("n") or 1)
            if n == 0:
                raise AngleParseError(f"Angle '{text}' divides by zero")
            value = (k * math.pi) / n
            if match.group("sign") == "-":
                value = -value
        else:
            try:
                value = float(text)
            except ValueError:
                raise AngleParseError(  # noqa: B904
                    f"Angle '{text}' is neither a real number nor a fraction like pi/4"
                )
    if not math.isfinite(value):
        raise AngleParseError(f"Angle '{text}' is not finite")
    return value


def parse_grid(text: str) -> list[float]:
    """
    Parse a parameter grid.

    "start:stop:count" gives count evenly spaced points including both ends;
    anything else is read as a comma-separated list of angles.
    """
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"Grid '{text}' must look like start:stop:count")
        start, stop = parse_angle(parts[0]), parse_angle(parts[1])
        try:
            count = int(parts[2])
        except ValueError:
            raise ConfigError(f"Grid count '{parts[2]}' is not an integer")  # noqa: B904
        if count < 1:
            raise ConfigError(f"Grid '{text}' needs at least one point")
        # linspace pins both endpoints exactly
        return [float(v) for v in np.linspace(start, stop, count)]

    values = [parse_angle(item) for item in text.split(",") if item.strip()]
    if not values:
        raise ConfigError("Grid is empty")
    return values


def format_float(value: float) -> str:
    """Full double precision, no negative zero."""
    return format(float(value) + 0.0, ".17g")


def progress(
    iterable: Iterable[T], desc: str, total: int | None = None
) -> Iterator[T]:
    return iter(
        tqdm(iterable, desc=desc, total=total, leave=False, disable=not progress_enabled())
    )
