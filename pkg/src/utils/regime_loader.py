"""
File: regime_loader.py
Description: Named parameter presets for the limiting regimes of the walk.
"""

from copy import deepcopy

from errors import ConfigError
from utils.utils import parse_angle

_ANGLE_KEYS = ("theta_c", "theta_b", "theta_m")


def list_regimes() -> list[str]:
    """Return a list of all available regime preset names."""
    add_input_twins()
    return list(REGIME_PRESETS.keys())


def load_regime(name: str) -> dict:
    """Deep copy of a preset with its angle literals parsed to radians."""
    add_input_twins()
    if name not in REGIME_PRESETS:
        raise ConfigError(
            f"Unknown regime '{name}'. Valid options are: {', '.join(list_regimes())}."
        )
    regime = deepcopy(REGIME_PRESETS[name])
    for key in _ANGLE_KEYS:
        regime[key] = parse_angle(regime[key])
    return regime


def evolve_regime(base: str, changes: dict) -> dict:
    regime = deepcopy(REGIME_PRESETS[base])
    regime.update(changes)
    return regime


def describe_regime(name: str) -> str:
    """Return a human-readable description of a regime preset."""
    try:
        preset = REGIME_PRESETS[name]
    except KeyError:
        raise ConfigError(f"Unknown regime preset: {name}")  # noqa: B904
    return f"{preset['name']}: {preset['description']}"


def add_input_twins():
    """Unsymmetrized twins of the presets whose behaviour flips with the input state."""
    REGIME_PRESETS.setdefault(
        "zero_variance",
        evolve_regime(
            "ballistic",
            {
                "name": "Zero Variance",
                "description": "Ballistic angles from the unsymmetrized input: a single "
                "straight line, variance zero at every step.",
                "icon": "📍",
                "input": "unsym",
            },
        ),
    )
    REGIME_PRESETS.setdefault(
        "classical_unsym",
        evolve_regime(
            "classical",
            {
                "name": "Classical (unsymmetrized)",
                "description": "Full decoherence from a single coin state; still diffusive.",
                "input": "unsym",
            },
        ),
    )


REGIME_PRESETS = {
    "ballistic": {
        "name": "Ballistic",
        "description": "Full recording with an identity coin on marked sites: two outward "
        "straight lines, variance t^2.",
        "icon": "🚀",
        "theta_c": "pi/4",
        "theta_b": "0",
        "theta_m": "pi/2",
        "steps": 7,
        "input": "sym",
    },
    "ideal_quantum": {
        "name": "Ideal Quantum",
        "description": "No recording: the memory never changes and the walk is a balanced "
        "coined quantum walk whatever theta_B is.",
        "icon": "🌊",
        "theta_c": "pi/4",
        "theta_b": "pi/4",
        "theta_m": "0",
        "steps": 7,
        "input": "sym",
    },
    "quasi_classical": {
        "name": "Quasi-Classical",
        "description": "Balanced coin everywhere with partial recording; tracing out the "
        "memory decoheres the walk.",
        "icon": "🌫️",
        "theta_c": "pi/4",
        "theta_b": "pi/4",
        "theta_m": "pi/4",
        "steps": 7,
        "input": "sym",
    },
    "classical": {
        "name": "Classical",
        "description": "Full recording with a balanced coin: maximal entanglement with the "
        "memory and binomial-like diffusion.",
        "icon": "🎲",
        "theta_c": "pi/4",
        "theta_b": "pi/4",
        "theta_m": "pi/2",
        "steps": 7,
        "input": "sym",
    },
    "localized": {
        "name": "Localized",
        "description": "Full recording with a bit-flip coin on marked sites: the walker "
        "bounces back on every other step and stays near the origin.",
        "icon": "🪃",
        "theta_c": "pi/4",
        "theta_b": "pi/2",
        "theta_m": "pi/2",
        "steps": 7,
        "input": "sym",
    },
}
