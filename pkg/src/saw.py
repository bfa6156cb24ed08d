"""
File: saw.py
Description: Monte Carlo engine for classical self-avoiding random walks on a line.

A walker at site x steps to x-1 or x+1 with probability proportional to
exp(-g * m), where m is the number of earlier visits to that neighbour (or that
number mod 2). The start site counts as visited before the first step.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import partial

import numpy as np
from colored import Fore, Style

from errors import ConfigError, DegenerateSeriesError
from params import SAW_G_CAP
from stats import VarianceSeries, fit_power
from sweep import BetaPoint, parallel_map
from utils.logging_config import setup_logger
from utils.utils import progress

logger = setup_logger(__name__)

_U64 = 2**64


@dataclass(frozen=True)
class SawConfig:
    """
    One classical ensemble.

    Attributes:
        g (float): self-avoidance strength, 0 for an ordinary random walk.
        steps (int): steps per walk.
        replicates (int): independent walks in the ensemble.
        mod2 (bool): count visits modulo 2, like a memory qubit flipped on each visit.
        seed (int): base seed; replicate i draws from the Philox stream keyed (seed, i).
    """

    g: float
    steps: int
    replicates: int
    mod2: bool = True
    seed: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if not math.isfinite(self.g) or self.g < 0:
            raise ConfigError(f"g must be a finite value >= 0 (got {self.g})")
        if self.steps < 1:
            raise ConfigError(f"steps must be >= 1 (got {self.steps})")
        if self.replicates < 1:
            raise ConfigError(f"replicates must be >= 1 (got {self.replicates})")

    def replicate_generator(self, index: int) -> np.random.Generator:
        """Counter-based stream for one replicate, independent of execution order."""
        key = ((self.seed % _U64) << 64) | (index % _U64)
        return np.random.Generator(np.random.Philox(key=key))


@dataclass
class VisitLedger:
    """Visit counts n_i of every site touched so far; grows with the walk."""

    counts: dict[int, int] = field(default_factory=dict)
    current: int = 0

    def start(self, origin: int = 0) -> None:
        self.counts = {origin: 1}
        self.current = origin

    def visit(self, site: int) -> None:
        self.counts[site] = self.counts.get(site, 0) + 1
        self.current = site

    def count(self, site: int) -> int:
        return self.counts.get(site, 0)


def step_probabilities(ledger: VisitLedger, g: float, mod2: bool) -> tuple[float, float]:
    """
    (q_left, q_right) with q_i = exp(-g m_i) / sum_j exp(-g m_j).

    g is capped at SAW_G_CAP; beyond it the avoided neighbour already has
    probability below 1e-20.
    """
    if g < 0:
        raise ConfigError(f"g must be >= 0 (got {g})")
    g = min(g, SAW_G_CAP)
    m_left = ledger.count(ledger.current - 1)
    m_right = ledger.count(ledger.current + 1)
    if mod2:
        m_left, m_right = m_left % 2, m_right % 2

    # log(q_right / q_left); evaluate the smaller branch and take the complement
    d = g * (m_left - m_right)
    if d >= 0:
        w = math.exp(-d)
        q_left = w / (1.0 + w)
        return q_left, 1.0 - q_left
    w = math.exp(d)
    q_right = w / (1.0 + w)
    return 1.0 - q_right, q_right


def simulate_replicate(config: SawConfig, index: int) -> np.ndarray:
    """Positions 0..steps of replicate `index`."""
    rng = config.replicate_generator(index)
    draws = rng.random(config.steps)
    ledger = VisitLedger()
    ledger.start(0)

    positions = np.zeros(config.steps + 1, dtype=np.int64)
    for t in range(config.steps):
        q_left, _ = step_probabilities(ledger, config.g, config.mod2)
        site = ledger.current - 1 if draws[t] < q_left else ledger.current + 1
        ledger.visit(site)
        positions[t + 1] = site
    return positions


def simulate_saw(config: SawConfig, workers: int = 1) -> VarianceSeries:
    """Ensemble mean and variance of the position at every step."""
    if config.g > SAW_G_CAP:
        logger.info(
            f"g={config.g:g} is above the cap {SAW_G_CAP:g}; "
            "treated as a completely self-avoiding walk"
        )

    indices = range(config.replicates)
    run_one = partial(simulate_replicate, config)
    if workers == 1:
        walks = [run_one(i) for i in progress(indices, desc=f"saw g={config.g:g}")]
    else:
        walks = parallel_map(run_one, list(indices), workers=workers, desc="replicates")

    # rows stay in replicate order whatever the scheduling
    positions = np.vstack(walks).astype(float)
    series = VarianceSeries.from_arrays(
        range(config.steps + 1), positions.mean(axis=0), positions.var(axis=0)
    )
    logger.debug(
        f"SAW g={config.g:g} mod2={config.mod2}: var({config.steps})="
        f"{series.final_variance:.3f} over {config.replicates} replicates"
    )
    return series


def derive_seed(seed: int, index: int) -> int:
    """Seed for grid point `index`, a pure function of (seed, index)."""
    state = np.random.SeedSequence([seed % _U64, index]).generate_state(1, np.uint64)
    return int(state[0])


def beta_vs_g(
    g_grid: Sequence[float],
    steps: int = 200,
    replicates: int = 1000,
    mod2: bool = True,
    seed: int = 0,
    workers: int = 1,
    on_series: Callable[[int, float, VarianceSeries], None] | None = None,
) -> list[BetaPoint]:
    """
    Variance exponent beta of the classical walk at each self-avoidance strength.

    on_series(index, g, series) is called with every ensemble series as soon as
    it is simulated, before the fit.
    """
    if not g_grid:
        raise ConfigError("g grid must be non-empty")

    points = []
    for index, g in enumerate(g_grid):
        config = SawConfig(g, steps, replicates, mod2, derive_seed(seed, index))
        series = simulate_saw(config, workers=workers)
        if on_series is not None:
            on_series(index, float(g), series)
        try:
            fit = fit_power(series)
        except DegenerateSeriesError as e:
            logger.warning(f"⚠️ No power law at g={g:g}: {e}")
            points.append(BetaPoint(float(g), None, None))
            continue
        points.append(BetaPoint(float(g), fit.beta, fit.r_squared))
        logger.info(
            f"{Fore.green}g={g:g}{Style.reset}: beta={fit.beta:.4f} "
            f"(r^2={fit.r_squared:.4f})"
        )
    return points
