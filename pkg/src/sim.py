"""
File: sim.py
Description: Drives self-avoiding quantum walks and the memory-free reference walks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from colored import Fore, Style

from lattice import (
    Lattice,
    SparseState,
    make_lattice,
    norm_squared,
    prepare_symmetrized,
    prepare_unsymmetrized,
)
from operators import InputKind, WalkParams, walk_step
from stats import VarianceSeries
from utils.logging_config import setup_logger

logger = setup_logger(__name__)


@dataclass
class Marginal:
    """Position distribution p_x with coin and memory traced out."""

    lattice: Lattice
    probabilities: np.ndarray

    def positions(self) -> np.ndarray:
        return np.arange(self.lattice.n_sites) - self.lattice.start_index

    def support(self, tol: float = 1e-12) -> list[int]:
        """Positions (relative to the start) carrying more than `tol` probability."""
        return [int(x) for x in self.positions()[self.probabilities > tol]]

    def reflected(self) -> np.ndarray:
        """p mirrored about the start site."""
        start = self.lattice.start_index
        mirrored = np.zeros_like(self.probabilities)
        for site, p in enumerate(self.probabilities):
            image = 2 * start - site
            if 0 <= image < self.lattice.n_sites:
                mirrored[image] = p
        return mirrored


@dataclass
class Trajectory:
    params: WalkParams
    marginals: list[Marginal]
    variances: VarianceSeries
    states: list[SparseState] | None = None

    @property
    def lattice(self) -> Lattice:
        return self.marginals[0].lattice

    @property
    def final_variance(self) -> float:
        return self.variances.final_variance

    def distribution_rows(self):
        """(t, x, p) for every step and every site, x relative to the start."""
        for t, marginal in enumerate(self.marginals):
            for x, p in zip(marginal.positions(), marginal.probabilities, strict=True):
                yield t, int(x), float(p)


def marginal(state: SparseState) -> Marginal:
    probabilities = np.zeros(state.lattice.n_sites)
    for label, amp in state.items():
        probabilities[label.site] += amp.real**2 + amp.imag**2
    return Marginal(state.lattice, probabilities)


def prepare_input(lattice: Lattice, kind: InputKind) -> SparseState:
    if kind is InputKind.SYMMETRIZED:
        return prepare_symmetrized(lattice)
    return prepare_unsymmetrized(lattice)


class WalkSimulation:
    """
    Evolves one walk step by step and records the marginal after each step.

    Full states are only kept when `keep_states` is set: at t steps the state can
    hold up to 2 * 4^t entries, while a marginal is N floats.
    """

    def __init__(self, params: WalkParams, keep_states: bool = False, prune: float = 0.0):
        self.params = params
        self.prune = prune
        self.lattice = make_lattice(max(params.steps, 1))
        self.state = prepare_input(self.lattice, params.input)
        self.current_time = 0
        self.marginals: list[Marginal] = [marginal(self.state)]
        self.states: list[SparseState] | None = [self.state] if keep_states else None
        self.peak_entries = len(self.state)

    def step(self) -> None:
        self.state = walk_step(self.state, self.params, prune=self.prune)
        self.current_time += 1
        self.marginals.append(marginal(self.state))
        if self.states is not None:
            self.states.append(self.state)
        self.peak_entries = max(self.peak_entries, len(self.state))
        logger.debug(
            f"t={self.current_time}: {len(self.state)} entries, "
            f"norm^2={norm_squared(self.state):.15f}"
        )

    def run(self) -> Trajectory:
        while self.current_time < self.params.steps:
            self.step()

        if self.prune > 0:
            drift = 1.0 - norm_squared(self.state)
            logger.warning(
                f"{Fore.yellow}Prune threshold {self.prune:g} set: norm drifted by "
                f"{drift:.3e} over {self.params.steps} steps{Style.reset}"
            )

        series = VarianceSeries.from_marginals(self.marginals, self.lattice.start_index)
        logger.debug(
            f"Walk theta_c={self.params.theta_c:.4f} theta_b={self.params.theta_b:.4f} "
            f"theta_m={self.params.theta_m:.4f} t={self.params.steps}: "
            f"final variance {series.final_variance:.6f}, peak {self.peak_entries} entries"
        )
        return Trajectory(self.params, self.marginals, series, self.states)


def run_walk(params: WalkParams, keep_states: bool = False, prune: float = 0.0) -> Trajectory:
    return WalkSimulation(params, keep_states=keep_states, prune=prune).run()


# --- reference walks -------------------------------------------------------


def coined_walk_marginals(
    theta_c: float, steps: int, input: InputKind | str = InputKind.SYMMETRIZED
) -> list[Marginal]:
    """
    Plain coined walk with coin R(theta_c) and no memory, as dense arrays.

    psi[x, k] is the amplitude at site x with coin index k (0 for -1, 1 for +1).
    """
    lattice = make_lattice(max(steps, 1))
    kind = InputKind.parse(input)
    psi = np.zeros((lattice.n_sites, 2), dtype=np.complex128)
    if kind is InputKind.SYMMETRIZED:
        psi[lattice.start_index, :] = 1 / math.sqrt(2)
    else:
        psi[lattice.start_index, 1] = 1.0

    c, s = math.cos(theta_c), math.sin(theta_c)
    coin = np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)

    def _marginal(amps: np.ndarray) -> Marginal:
        return Marginal(lattice, np.sum(np.abs(amps) ** 2, axis=1))

    marginals = [_marginal(psi)]
    for _ in range(steps):
        psi = psi @ coin.T
        shifted = np.zeros_like(psi)
        shifted[:-1, 0] = psi[1:, 0]  # coin -1 moves left
        shifted[1:, 1] = psi[:-1, 1]  # coin +1 moves right
        psi = shifted
        marginals.append(_marginal(psi))
    return marginals


def classical_walk_marginals(steps: int) -> list[Marginal]:
    """Fair +-1 random walk propagated as a probability vector."""
    lattice = make_lattice(max(steps, 1))
    p = np.zeros(lattice.n_sites)
    p[lattice.start_index] = 1.0

    marginals = [Marginal(lattice, p.copy())]
    for _ in range(steps):
        nxt = np.zeros_like(p)
        nxt[:-1] += 0.5 * p[1:]
        nxt[1:] += 0.5 * p[:-1]
        p = nxt
        marginals.append(Marginal(lattice, p.copy()))
    return marginals


def total_variation(p: Marginal, q: Marginal) -> float:
    if p.lattice != q.lattice:
        raise ValueError("Marginals live on different lattices")
    return 0.5 * float(np.sum(np.abs(p.probabilities - q.probabilities)))


@dataclass
class ReferenceDistances:
    """Distance of a trajectory's marginals to the ideal quantum and classical walks."""

    quantum: list[float] = field(default_factory=list)
    classical: list[float] = field(default_factory=list)


def reference_distances(trajectory: Trajectory) -> ReferenceDistances:
    params = trajectory.params
    quantum = coined_walk_marginals(params.theta_c, params.steps, params.input)
    classical = classical_walk_marginals(params.steps)
    return ReferenceDistances(
        quantum=[total_variation(a, b) for a, b in zip(trajectory.marginals, quantum, strict=True)],
        classical=[
            total_variation(a, b) for a, b in zip(trajectory.marginals, classical, strict=True)
        ],
    )
