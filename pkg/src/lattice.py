"""
File: lattice.py
Description: The finite line, basis labels and the sparse state vector of the walk.

The walker, its coin and one memory qubit per site live in a Hilbert space of
dimension N * 2 * 2^N. Only labels with non-zero amplitude are stored, keyed by
(site, coin, memory) where bit i of `memory` is the qubit of site i.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import NamedTuple

from errors import LatticeSizingError, StepCapError
from params import MAX_STEPS, MEMORY_WORD_BITS
from utils.logging_config import setup_logger

logger = setup_logger(__name__)

COIN_DIRECTIONS = (-1, +1)


@dataclass(frozen=True)
class Lattice:
    """
    A line of `n_sites` sites with the walker launched from `start_index`.

    Sites are indexed from 0; reported positions are relative to the start site.
    """

    n_sites: int
    start_index: int

    def __post_init__(self):
        if self.n_sites < 1:
            raise LatticeSizingError(f"Lattice needs at least one site (got {self.n_sites})")
        if self.n_sites > MEMORY_WORD_BITS:
            raise LatticeSizingError(
                f"{self.n_sites} sites do not fit a {MEMORY_WORD_BITS}-bit memory word"
            )
        if not 0 <= self.start_index < self.n_sites:
            raise LatticeSizingError(
                f"Start site {self.start_index} outside [0, {self.n_sites})"
            )

    def position(self, site: int) -> int:
        return site - self.start_index

    def site(self, position: int) -> int:
        return position + self.start_index


class BasisLabel(NamedTuple):
    site: int
    coin: int  # -1 or +1
    memory: int  # bit i = q_i


@dataclass
class SparseState:
    """
    Map from BasisLabel to complex amplitude.

    Exact zeros are never stored. The container is owned by whoever built it;
    operators return fresh states rather than sharing one.
    """

    lattice: Lattice
    amplitudes: dict[BasisLabel, complex] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __iter__(self) -> Iterator[BasisLabel]:
        return iter(self.amplitudes)

    def items(self):
        return self.amplitudes.items()

    def amplitude(self, label: BasisLabel) -> complex:
        return self.amplitudes.get(label, 0j)

    def set(self, label: BasisLabel, amplitude: complex) -> None:
        if amplitude == 0:
            self.amplitudes.pop(label, None)
        else:
            self.amplitudes[label] = amplitude

    def copy(self) -> SparseState:
        return SparseState(self.lattice, dict(self.amplitudes))

    def prune(self, threshold: float = 0.0) -> int:
        """
        Drop entries with |amplitude| <= threshold and return how many went.

        With the default threshold only exact zeros are removed and evolution
        stays unitary. A positive threshold trades norm for sparsity.
        """
        before = norm_squared(self) if threshold > 0 else 0.0
        doomed = [
            label for label, amp in self.amplitudes.items() if abs(amp) <= threshold
        ]
        for label in doomed:
            del self.amplitudes[label]

        if threshold > 0 and doomed:
            drift = before - norm_squared(self)
            logger.debug(
                f"Pruned {len(doomed)} entries below {threshold:g}; norm drift {drift:.3e}"
            )
        return len(doomed)


def make_lattice(max_steps: int) -> Lattice:
    """Smallest centred lattice a walk of `max_steps` steps can never leave."""
    if max_steps < 1:
        raise StepCapError(f"max_steps must be >= 1 (got {max_steps})")
    if max_steps > MAX_STEPS:
        raise StepCapError(
            f"max_steps={max_steps} exceeds the {MAX_STEPS}-step cap of the memory word"
        )
    return Lattice(n_sites=2 * max_steps + 3, start_index=max_steps + 1)


def hilbert_dimension(lattice: Lattice) -> int:
    """N * 2^(N+1): position x coin x one qubit per site. Exact (Python int)."""
    n = lattice.n_sites
    return n * 2 ** (n + 1)


def prepare_symmetrized(lattice: Lattice) -> SparseState:
    """Equal coin superposition at the start site, memory cleared."""
    amp = complex(1 / math.sqrt(2))
    state = SparseState(lattice)
    for coin in COIN_DIRECTIONS:
        state.set(BasisLabel(lattice.start_index, coin, 0), amp)
    return state


def prepare_unsymmetrized(lattice: Lattice) -> SparseState:
    """Coin +1 at the start site, memory cleared."""
    state = SparseState(lattice)
    state.set(BasisLabel(lattice.start_index, +1, 0), 1 + 0j)
    return state


def norm_squared(state: SparseState) -> float:
    return math.fsum(amp.real**2 + amp.imag**2 for amp in state.amplitudes.values())
