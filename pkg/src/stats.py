"""
File: stats.py
Description: Moments, variance fits and subsystem-coupling report for walk statistics.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from errors import DegenerateSeriesError, SeriesFormatError
from params import ANGLE_TOLERANCE, VARIANCE_FLOOR
from utils.logging_config import setup_logger
from utils.utils import clamp

if TYPE_CHECKING:
    from sim import Marginal

logger = setup_logger(__name__)


class SeriesEntry(NamedTuple):
    t: int
    mu: float
    var: float


@dataclass
class VarianceSeries:
    """Per-step mean and variance of the walker's position."""

    entries: list[SeriesEntry] = field(default_factory=list)

    def __post_init__(self):
        if self.entries and self.entries[0].t != 0:
            raise SeriesFormatError(f"Series must start at t=0 (got t={self.entries[0].t})")
        previous = -1
        for entry in self.entries:
            if entry.t <= previous:
                raise SeriesFormatError(
                    f"Series times must strictly increase (t={entry.t} after {previous})"
                )
            if entry.var < 0 or not math.isfinite(entry.var):
                raise SeriesFormatError(f"Invalid variance {entry.var} at t={entry.t}")
            previous = entry.t

    @classmethod
    def from_marginals(cls, marginals: Sequence[Marginal], origin: int) -> VarianceSeries:
        entries = []
        for t, marginal in enumerate(marginals):
            mu, var = moments(marginal, origin)
            entries.append(SeriesEntry(t, mu, var))
        return cls(entries)

    @classmethod
    def from_arrays(
        cls, times: Iterable[int], means: Iterable[float], variances: Iterable[float]
    ) -> VarianceSeries:
        return cls(
            [
                SeriesEntry(int(t), float(mu), float(var))
                for t, mu, var in zip(times, means, variances, strict=True)
            ]
        )

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def times(self) -> np.ndarray:
        return np.array([e.t for e in self.entries], dtype=float)

    @property
    def means(self) -> np.ndarray:
        return np.array([e.mu for e in self.entries], dtype=float)

    @property
    def variances(self) -> np.ndarray:
        return np.array([e.var for e in self.entries], dtype=float)

    @property
    def final_variance(self) -> float:
        return self.entries[-1].var


@dataclass(frozen=True)
class PolyFit:
    """sigma^2(t) = k0 + k1 t + k2 t^2, least squares over every entry."""

    k0: float
    k1: float
    k2: float
    residual: float


@dataclass(frozen=True)
class PowerFit:
    """sigma^2(t) = C t^beta from a log-log regression."""

    beta: float
    r_squared: float


def moments(marginal: Marginal, origin: int) -> tuple[float, float]:
    """
    Mean and variance of the position measured from `origin`.

    Probabilities are divided by their total first, so round-off in the norm
    (or mass removed by pruning) does not leak into the moments.
    """
    p = marginal.probabilities
    total = float(p.sum())
    if total > 0:
        p = p / total
    x = np.arange(p.shape[0], dtype=float) - origin
    mu = float(np.dot(p, x))
    var = float(np.dot(p, (x - mu) ** 2))
    return mu, var


def fit_poly2(series: VarianceSeries) -> PolyFit:
    if len(series) < 3:
        raise DegenerateSeriesError(
            f"A second-order fit needs at least 3 entries (got {len(series)})"
        )
    t, var = series.times, series.variances
    k2, k1, k0 = np.polyfit(t, var, 2)
    residual = float(np.sum((np.polyval([k2, k1, k0], t) - var) ** 2))
    return PolyFit(k0=float(k0), k1=float(k1), k2=float(k2), residual=residual)


def fit_power(series: VarianceSeries) -> PowerFit:
    """
    Fit sigma^2(t) = C t^beta by regressing log(var) on log(t).

    Only entries with t >= 1 and a variance above VARIANCE_FLOOR times the
    series maximum take part, so t = 0 (log diverges) and exactly ballistic
    single-branch walks (zero variance) never produce a number.
    """
    t, var = series.times, series.variances
    usable = t >= 1
    peak = float(var[usable].max()) if usable.any() else 0.0
    usable &= var > VARIANCE_FLOOR * peak
    if peak <= 0 or usable.sum() < 2:
        raise DegenerateSeriesError(
            "degenerate series: fewer than 2 entries with t >= 1 and non-zero variance"
        )

    log_t, log_var = np.log(t[usable]), np.log(var[usable])
    beta, intercept = np.polyfit(log_t, log_var, 1)
    ss_res = float(np.sum((log_var - (beta * log_t + intercept)) ** 2))
    ss_tot = float(np.sum((log_var - log_var.mean()) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return PowerFit(beta=float(beta), r_squared=clamp(r_squared, 0.0, 1.0))


def fit_summary(series: VarianceSeries) -> dict[str, float | None]:
    """Both fits as a flat dict; fits that cannot be made are None."""
    summary: dict[str, float | None] = dict.fromkeys(
        ("k0", "k1", "k2", "beta", "r_squared")
    )
    try:
        poly = fit_poly2(series)
        summary.update(k0=poly.k0, k1=poly.k1, k2=poly.k2)
    except DegenerateSeriesError as e:
        logger.warning(f"Polynomial fit skipped: {e}")
    try:
        power = fit_power(series)
        summary.update(beta=power.beta, r_squared=power.r_squared)
    except DegenerateSeriesError as e:
        logger.warning(f"Power-law fit skipped: {e}")
    return summary


@dataclass(frozen=True)
class CouplingReport:
    coin_couples_all: bool  # position, coin and memory
    memory_couples_position: bool
    step_couples_position_coin: bool = True
    text: str = ""


def _same_angle(a: float, b: float) -> bool:
    return abs(a - b) <= ANGLE_TOLERANCE


def coupling_report(theta_b: float, theta_c: float, theta_m: float) -> CouplingReport:
    """Which subsystems each operator entangles for these angles."""
    coin = not _same_angle(theta_c, theta_b)
    memory = not _same_angle(theta_m, 0.0)
    lines = [
        "coin:   couples position, coin and memory"
        if coin
        else "coin:   theta_C == theta_B, acts on the coin alone",
        "memory: couples position and memory"
        if memory
        else "memory: theta_M == 0, memory never changes",
        "step:   couples position and coin",
    ]
    return CouplingReport(
        coin_couples_all=coin,
        memory_couples_position=memory,
        step_couples_position_coin=True,
        text="\n".join(lines),
    )
