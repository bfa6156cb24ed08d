import logging
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import DegenerateSeriesError, SeriesFormatError
from lattice import make_lattice
from sim import Marginal
from stats import (
    SeriesEntry,
    VarianceSeries,
    coupling_report,
    fit_poly2,
    fit_power,
    fit_summary,
    moments,
)


def _series(variances):
    return VarianceSeries.from_arrays(
        range(len(variances)), [0.0] * len(variances), variances
    )


def test_moments_of_a_two_point_distribution():
    lattice = make_lattice(3)
    p = np.zeros(lattice.n_sites)
    p[lattice.site(-3)] = 0.5
    p[lattice.site(3)] = 0.5
    mu, var = moments(Marginal(lattice, p), lattice.start_index)
    assert mu == 0.0
    assert var == 9.0


def test_moments_of_a_delta_and_a_binomial():
    lattice = make_lattice(4)
    delta = np.zeros(lattice.n_sites)
    delta[lattice.start_index] = 1.0
    assert moments(Marginal(lattice, delta), lattice.start_index) == (0.0, 0.0)

    binomial = np.zeros(lattice.n_sites)
    for x, weight in zip((-4, -2, 0, 2, 4), (1, 4, 6, 4, 1), strict=True):
        binomial[lattice.site(x)] = weight / 16
    assert moments(Marginal(lattice, binomial), lattice.start_index) == (0.0, 4.0)


def test_moments_ignore_norm_round_off():
    lattice = make_lattice(7)
    p = np.zeros(lattice.n_sites)
    p[lattice.site(-7)] = p[lattice.site(7)] = (1 / math.sqrt(2)) ** 2
    assert moments(Marginal(lattice, p), lattice.start_index) == (0.0, 49.0)


def test_series_rejects_bad_entries():
    with pytest.raises(SeriesFormatError):
        VarianceSeries([SeriesEntry(0, 0.0, 0.0), SeriesEntry(0, 0.0, 1.0)])
    with pytest.raises(SeriesFormatError):
        VarianceSeries([SeriesEntry(0, 0.0, -1.0)])
    with pytest.raises(SeriesFormatError):
        VarianceSeries([SeriesEntry(0, 0.0, math.inf)])


def test_series_must_start_at_zero():
    with pytest.raises(SeriesFormatError, match="start at t=0"):
        VarianceSeries.from_arrays([1, 2, 3], [0.0] * 3, [1.0, 2.0, 3.0])
    assert len(VarianceSeries([])) == 0


def test_poly_fit_recovers_exact_quadratic():
    t = np.arange(8)
    fit = fit_poly2(_series(0.5 + 0.25 * t + 2.0 * t**2))
    assert fit.k0 == pytest.approx(0.5, abs=1e-9)
    assert fit.k1 == pytest.approx(0.25, abs=1e-9)
    assert fit.k2 == pytest.approx(2.0, abs=1e-9)
    assert fit.residual < 1e-18


def test_poly_fit_needs_three_entries():
    with pytest.raises(DegenerateSeriesError):
        fit_poly2(_series([0.0, 1.0]))


@given(
    st.floats(min_value=0.1, max_value=3.0),
    st.floats(min_value=0.01, max_value=100.0),
)
def test_power_fit_recovers_exponent(beta, scale):
    t = np.arange(0, 20, dtype=float)
    fit = fit_power(_series(scale * t**beta))
    assert fit.beta == pytest.approx(beta, abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-9)


def test_power_fit_skips_t_zero():
    t = np.arange(0, 6, dtype=float)
    variances = t**2
    variances[0] = 123.0  # never used
    assert fit_power(_series(variances)).beta == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("variances", [[0.0] * 8, [0.0, 1.0], [5.0]])
def test_power_fit_degenerate(variances):
    with pytest.raises(DegenerateSeriesError):
        fit_power(_series(variances))


def test_fit_summary_keeps_partial_results(caplog):
    with caplog.at_level(logging.WARNING, logger="stats"):
        summary = fit_summary(_series([0.0] * 8))
    assert summary["k2"] == pytest.approx(0.0, abs=1e-12)
    assert summary["beta"] is None
    assert summary["r_squared"] is None
    assert "Power-law fit skipped" in caplog.text


def test_fit_summary_keys():
    t = np.arange(8, dtype=float)
    summary = fit_summary(_series(t))
    assert list(summary) == ["k0", "k1", "k2", "beta", "r_squared"]
    assert summary["beta"] == pytest.approx(1.0)


@pytest.mark.parametrize(
    "theta_b, theta_c, theta_m, coin, memory",
    [
        (math.pi / 4, math.pi / 4, 0.0, False, False),
        (0.0, math.pi / 4, math.pi / 2, True, True),
        (math.pi / 4, math.pi / 4, math.pi / 4, False, True),
        (math.pi / 2, math.pi / 4, 0.0, True, False),
    ],
)
def test_coupling_report(theta_b, theta_c, theta_m, coin, memory):
    report = coupling_report(theta_b, theta_c, theta_m)
    assert report.coin_couples_all is coin
    assert report.memory_couples_position is memory
    assert report.step_couples_position_coin is True
    assert report.text.count("\n") == 2


def test_coupling_report_tolerance():
    report = coupling_report(math.pi / 4 + 1e-13, math.pi / 4, 1e-13)
    assert not report.coin_couples_all
    assert not report.memory_couples_position
