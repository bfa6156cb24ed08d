"""
File: operators.py
Description: Memory, coin and step operators of the self-avoiding quantum walk.

One walk step is S . C(theta_C, theta_B) . M(theta_M):
  M  rotates the memory qubit of the walker's current site by R(theta_M),
  C  mixes the coin with R(theta_C) if that qubit is 0 and R(theta_B) if it is 1,
  S  moves the walker one site in the direction of its coin.

Coin matrices are indexed (coin -1, coin +1) along rows and columns.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import NDArray

from errors import ConfigError, LatticeSizingError
from lattice import BasisLabel, SparseState
from params import TRIG_SNAP_TOLERANCE
from utils.logging_config import setup_logger

logger = setup_logger(__name__)

CoinMatrix = NDArray[np.complex128]

_QUARTER_TURN = math.pi / 2
# cos, sin at k * pi/2
_QUARTER_TURN_TRIG = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))


class InputKind(Enum):
    SYMMETRIZED = "sym"
    UNSYMMETRIZED = "unsym"

    @classmethod
    def parse(cls, value: InputKind | str) -> InputKind:
        if isinstance(value, InputKind):
            return value
        aliases = {
            "sym": cls.SYMMETRIZED,
            "symmetrized": cls.SYMMETRIZED,
            "symmetrised": cls.SYMMETRIZED,
            "unsym": cls.UNSYMMETRIZED,
            "unsymmetrized": cls.UNSYMMETRIZED,
            "unsymmetrised": cls.UNSYMMETRIZED,
        }
        try:
            return aliases[value.strip().lower()]
        except KeyError:
            raise ConfigError(  # noqa: B904
                f"Unknown input state '{value}'. Valid options are: sym, unsym."
            )


@dataclass(frozen=True)
class WalkParams:
    """
    Full configuration of one quantum walk.

    Attributes:
        theta_c (float): coin angle on unmarked sites (pi/4 is the balanced coin).
        theta_b (float): coin angle on marked sites, the back-action strength.
        theta_m (float): memory recording strength.
        steps (int): number of walk steps t.
        input (InputKind): symmetrized or unsymmetrized start state.
    """

    theta_c: float
    theta_b: float
    theta_m: float
    steps: int
    input: InputKind = InputKind.SYMMETRIZED

    def __post_init__(self):
        for name in ("theta_c", "theta_b", "theta_m"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite (got {getattr(self, name)})")
        if self.steps < 0:
            raise ConfigError(f"steps must be >= 0 (got {self.steps})")
        object.__setattr__(self, "input", InputKind.parse(self.input))

    @classmethod
    def from_dict(cls, values: dict[str, Any]) -> WalkParams:
        return cls(
            theta_c=float(values["theta_c"]),
            theta_b=float(values["theta_b"]),
            theta_m=float(values["theta_m"]),
            steps=int(values["steps"]),
            input=InputKind.parse(values.get("input", "sym")),
        )


def coin_index(direction: int) -> int:
    """Row/column of a coin direction: -1 -> 0, +1 -> 1."""
    if direction == -1:
        return 0
    if direction == 1:
        return 1
    raise ValueError(f"Coin direction must be -1 or +1 (got {direction})")


def _cos_sin(theta: float) -> tuple[float, float]:
    # exact at multiples of pi/2
    k = round(theta / _QUARTER_TURN)
    if abs(theta - k * _QUARTER_TURN) <= TRIG_SNAP_TOLERANCE * max(1.0, abs(theta)):
        return _QUARTER_TURN_TRIG[k % 4]
    return math.cos(theta), math.sin(theta)


def rotation(theta: float) -> CoinMatrix:
    """
    Pauli-X rotation R(theta) = [[cos, -i sin], [-i sin, cos]].

    theta = 0 is the identity and theta = pi/2 a bit flip (times -i).
    """
    c, s = _cos_sin(theta)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def reflectivity(theta_b: float) -> float:
    """Probability that a marked site reverses the walker, |sin theta_B|^2."""
    return abs(_cos_sin(theta_b)[1]) ** 2


def is_unitary(matrix: CoinMatrix, tol: float = 1e-14) -> bool:
    product = matrix.conj().T @ matrix
    return bool(np.allclose(product, np.eye(matrix.shape[0]), rtol=0.0, atol=tol))


def _accumulate(out: dict[BasisLabel, complex], label: BasisLabel, amp: complex):
    out[label] = out.get(label, 0j) + amp


def _collect(state: SparseState, out: dict[BasisLabel, complex]) -> SparseState:
    """Wrap merged amplitudes into a new state, dropping exact zeros."""
    return SparseState(state.lattice, {k: v for k, v in out.items() if v != 0})


def apply_memory(state: SparseState, theta_m: float) -> SparseState:
    """Rotate the memory qubit of each branch's current site by R(theta_m)."""
    r = rotation(theta_m)
    keep, flip = complex(r[0, 0]), complex(r[0, 1])
    out: dict[BasisLabel, complex] = {}

    for label, amp in state.amplitudes.items():
        if keep:
            _accumulate(out, label, keep * amp)
        if flip:
            flipped = BasisLabel(label.site, label.coin, label.memory ^ (1 << label.site))
            _accumulate(out, flipped, flip * amp)

    return _collect(state, out)


def apply_coin(state: SparseState, theta_c: float, theta_b: float) -> SparseState:
    """Mix the coin with R(theta_c) on unmarked sites and R(theta_b) on marked ones."""
    unmarked, marked = rotation(theta_c), rotation(theta_b)
    # (stay, turn) amplitudes, keyed by the memory bit of the current site
    factors = {
        0: (complex(unmarked[0, 0]), complex(unmarked[0, 1])),
        1: (complex(marked[0, 0]), complex(marked[0, 1])),
    }
    out: dict[BasisLabel, complex] = {}

    for label, amp in state.amplitudes.items():
        stay, turn = factors[(label.memory >> label.site) & 1]
        if stay:
            _accumulate(out, label, stay * amp)
        if turn:
            turned = BasisLabel(label.site, -label.coin, label.memory)
            _accumulate(out, turned, turn * amp)

    return _collect(state, out)


def apply_step(state: SparseState) -> SparseState:
    """Shift every branch one site along its coin. A pure relabelling."""
    n_sites = state.lattice.n_sites
    out: dict[BasisLabel, complex] = {}

    for label, amp in state.amplitudes.items():
        site = label.site + label.coin
        if not 0 <= site < n_sites:
            raise LatticeSizingError(
                f"Branch at site {label.site} stepped off a {n_sites}-site lattice; "
                "size the lattice with make_lattice(steps)"
            )
        out[BasisLabel(site, label.coin, label.memory)] = amp

    return SparseState(state.lattice, out)


def walk_step(state: SparseState, params: WalkParams, prune: float = 0.0) -> SparseState:
    """One full step S . C . M."""
    state = apply_memory(state, params.theta_m)
    state = apply_coin(state, params.theta_c, params.theta_b)
    state = apply_step(state)
    if prune > 0:
        state.prune(prune)
    return state
