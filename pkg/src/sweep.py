"""
File: sweep.py
Description: Parameter-grid sweeps over independent walks.

Every grid point is its own walk, so points can run in a process pool. Results
are assembled in grid order, which makes the output independent of scheduling.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, TypeVar

import numpy as np

from errors import ConfigError, DegenerateSeriesError
from operators import InputKind, WalkParams
from sim import run_walk
from stats import fit_power
from utils.logging_config import setup_logger
from utils.utils import progress

logger = setup_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# (theta_c, theta_b, theta_m, steps, input value)
WalkTask = tuple[float, float, float, int, str]


@dataclass
class SweepSurface:
    """values[i, j] is the final variance at theta_m[i], theta_b[j]."""

    theta_m: list[float]
    theta_b: list[float]
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (len(self.theta_m), len(self.theta_b)):
            raise ValueError(
                f"Surface shape {self.values.shape} does not match "
                f"{len(self.theta_m)} x {len(self.theta_b)} axes"
            )

    def value_at(self, theta_m: float, theta_b: float) -> float:
        i = int(np.argmin(np.abs(np.asarray(self.theta_m) - theta_m)))
        j = int(np.argmin(np.abs(np.asarray(self.theta_b) - theta_b)))
        return float(self.values[i, j])

    def rows(self):
        """(theta_m, theta_b, final_variance), row-major over theta_m."""
        for i, tm in enumerate(self.theta_m):
            for j, tb in enumerate(self.theta_b):
                yield tm, tb, float(self.values[i, j])


class BetaPoint(NamedTuple):
    strength: float  # theta_B for the quantum curve, g for the classical one
    beta: float | None  # None when the series has no usable power law
    r_squared: float | None


def parallel_map(
    fn: Callable[[T], R], tasks: Sequence[T], workers: int = 1, desc: str = "walks"
) -> list[R]:
    """Ordered map, serial or over a process pool."""
    if workers < 1:
        raise ConfigError(f"workers must be >= 1 (got {workers})")
    if workers == 1:
        return [fn(task) for task in progress(tasks, desc=desc)]

    chunksize = max(1, len(tasks) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(
            progress(pool.map(fn, tasks, chunksize=chunksize), desc=desc, total=len(tasks))
        )


def _final_variance(task: WalkTask) -> float:
    theta_c, theta_b, theta_m, steps, kind = task
    return run_walk(WalkParams(theta_c, theta_b, theta_m, steps, InputKind(kind))).final_variance


def _power_fit(task: WalkTask) -> tuple[float | None, float | None]:
    theta_c, theta_b, theta_m, steps, kind = task
    trajectory = run_walk(WalkParams(theta_c, theta_b, theta_m, steps, InputKind(kind)))
    try:
        fit = fit_power(trajectory.variances)
    except DegenerateSeriesError as e:
        logger.warning(f"⚠️ No power law at theta_B={theta_b:g} ({kind}): {e}")
        return None, None
    return fit.beta, fit.r_squared


def sweep(
    theta_m_grid: Sequence[float],
    theta_b_grid: Sequence[float],
    theta_c: float = math.pi / 4,
    steps: int = 7,
    input: InputKind | str = InputKind.SYMMETRIZED,
    workers: int = 1,
) -> SweepSurface:
    """Final variance over a (theta_M, theta_B) grid at fixed theta_C."""
    if not theta_m_grid or not theta_b_grid:
        raise ConfigError("Sweep grids must be non-empty")
    kind = InputKind.parse(input).value
    tasks: list[WalkTask] = [
        (theta_c, tb, tm, steps, kind) for tm in theta_m_grid for tb in theta_b_grid
    ]
    logger.info(
        f"Sweeping {len(theta_m_grid)} x {len(theta_b_grid)} grid "
        f"({len(tasks)} walks of {steps} steps, {workers} worker(s))"
    )
    values = parallel_map(_final_variance, tasks, workers=workers, desc="sweep")
    return SweepSurface(
        theta_m=list(theta_m_grid),
        theta_b=list(theta_b_grid),
        values=np.array(values, dtype=float).reshape(len(theta_m_grid), len(theta_b_grid)),
    )


def quantum_beta_vs_theta_b(
    theta_b_grid: Sequence[float],
    theta_c: float = math.pi / 4,
    theta_m: float = math.pi / 2,
    steps: int = 7,
    input: InputKind | str = InputKind.SYMMETRIZED,
    workers: int = 1,
) -> list[BetaPoint]:
    """
    Power-law exponent of the variance as theta_B varies at full memory recording.

    theta_B plays the part of the classical self-avoidance strength: pi/4 gives a
    diffusive walk, 0 a ballistic one.
    """
    if not theta_b_grid:
        raise ConfigError("theta_B grid must be non-empty")
    kind = InputKind.parse(input).value
    tasks: list[WalkTask] = [(theta_c, tb, theta_m, steps, kind) for tb in theta_b_grid]
    fits = parallel_map(_power_fit, tasks, workers=workers, desc="beta(theta_B)")
    return [BetaPoint(tb, beta, r2) for tb, (beta, r2) in zip(theta_b_grid, fits, strict=True)]
