import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import ConfigError
from saw import (
    SawConfig,
    VisitLedger,
    beta_vs_g,
    derive_seed,
    simulate_replicate,
    simulate_saw,
    step_probabilities,
)
from stats import fit_power

G_GRID = [0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 50.0]


def _ledger(n_left, n_right):
    ledger = VisitLedger()
    ledger.start(0)
    ledger.counts.update({-1: n_left, 1: n_right})
    return ledger


@pytest.mark.parametrize("mod2", [True, False])
def test_ordinary_random_walk_at_g_zero(mod2):
    assert step_probabilities(_ledger(3, 0), 0.0, mod2) == (0.5, 0.5)


@pytest.mark.parametrize("mod2", [True, False])
def test_probabilities_follow_the_exponential_rule(mod2):
    q_left, q_right = step_probabilities(_ledger(1, 0), math.log(2), mod2)
    assert q_left == pytest.approx(1 / 3, abs=1e-15)
    assert q_right == pytest.approx(2 / 3, abs=1e-15)


def test_mod2_counting_forgets_even_visits():
    assert step_probabilities(_ledger(2, 0), 5.0, mod2=True) == (0.5, 0.5)
    q_left, _ = step_probabilities(_ledger(2, 0), 5.0, mod2=False)
    assert q_left == pytest.approx(1 / (1 + math.exp(10)))


@given(
    st.floats(min_value=0.0, max_value=1e6),
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=10),
    st.booleans(),
)
def test_probabilities_are_normalized(g, n_left, n_right, mod2):
    q_left, q_right = step_probabilities(_ledger(n_left, n_right), g, mod2)
    assert abs(q_left + q_right - 1.0) <= 1e-15
    assert 0.0 < q_left <= 1.0
    assert 0.0 < q_right <= 1.0


def test_negative_g_is_rejected():
    with pytest.raises(ConfigError):
        step_probabilities(_ledger(0, 0), -0.1, True)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"g": -1.0, "steps": 10, "replicates": 10},
        {"g": math.nan, "steps": 10, "replicates": 10},
        {"g": 0.0, "steps": 0, "replicates": 10},
        {"g": 0.0, "steps": 10, "replicates": 0},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        SawConfig(**kwargs)


def test_ledger_counts_origin_before_first_step():
    ledger = VisitLedger()
    ledger.start(0)
    assert ledger.count(0) == 1
    ledger.visit(1)
    ledger.visit(0)
    assert ledger.count(0) == 2
    assert ledger.current == 0


def test_replicates_are_unit_steps_from_the_origin():
    config = SawConfig(g=1.0, steps=50, replicates=1, seed=3)
    positions = simulate_replicate(config, 0)
    assert positions[0] == 0
    assert set(np.abs(np.diff(positions))) == {1}


def test_replicate_streams_are_keyed_by_seed_and_index():
    config = SawConfig(g=0.5, steps=40, replicates=4, seed=11)
    assert np.array_equal(simulate_replicate(config, 2), simulate_replicate(config, 2))
    assert not np.array_equal(simulate_replicate(config, 1), simulate_replicate(config, 2))


def test_fixed_seed_is_bit_identical_across_worker_counts():
    config = SawConfig(g=0.75, steps=60, replicates=64, seed=5)
    serial = simulate_saw(config)
    pooled = simulate_saw(config, workers=2)
    assert serial.entries == pooled.entries


def test_derive_seed_is_pure():
    assert derive_seed(7, 3) == derive_seed(7, 3)
    assert derive_seed(7, 3) != derive_seed(7, 4)


def test_ordinary_walk_variance_grows_linearly():
    series = simulate_saw(SawConfig(g=0.0, steps=200, replicates=1000, seed=7))
    assert series.final_variance == pytest.approx(200, abs=20)


def test_completely_self_avoiding_walk_is_a_straight_line():
    series = simulate_saw(SawConfig(g=50.0, steps=200, replicates=1000, seed=7))
    var = series.variances
    t = series.times
    # every walk keeps the direction of its first step
    assert np.allclose(var[1:] / t[1:] ** 2, var[1], rtol=1e-12, atol=0)
    assert fit_power(series).beta == pytest.approx(2.0, abs=1e-9)


def test_partial_avoidance_is_superdiffusive():
    series = simulate_saw(SawConfig(g=1.0, steps=200, replicates=1000, seed=1))
    assert 1.0 < fit_power(series).beta < 2.0


def test_beta_rises_with_avoidance_strength():
    points = beta_vs_g(G_GRID, steps=200, replicates=1000, mod2=True, seed=7)
    betas = [p.beta for p in points]

    assert [p.strength for p in points] == G_GRID
    assert betas[0] == pytest.approx(1.0, abs=0.05)
    assert betas[-1] == pytest.approx(2.0, abs=0.02)
    for lower, higher in zip(betas, betas[1:], strict=False):
        assert higher >= lower - 0.03


@pytest.mark.parametrize("index", range(8))
def test_counting_rules_agree_for_a_fully_avoiding_walk(index):
    # visit counts never exceed 1 ahead of the walker, where n and n mod 2 coincide
    with_mod2 = SawConfig(g=50.0, steps=30, replicates=8, mod2=True, seed=13)
    without = SawConfig(g=50.0, steps=30, replicates=8, mod2=False, seed=13)
    assert np.array_equal(
        simulate_replicate(with_mod2, index), simulate_replicate(without, index)
    )


def test_free_walk_mean_stays_within_three_standard_errors():
    replicates = 1000
    series = simulate_saw(SawConfig(g=0.0, steps=200, replicates=replicates, seed=7))
    standard_error = np.sqrt(series.variances[1:] / replicates)
    assert np.all(np.abs(series.means[1:]) <= 3 * standard_error)
    assert series.means[0] == 0.0


def test_beta_vs_g_hands_over_every_series():
    seen = []
    points = beta_vs_g(
        [0.0, 2.0], steps=20, replicates=50, seed=3,
        on_series=lambda index, g, series: seen.append((index, g, len(series))),
    )
    assert seen == [(0, 0.0, 21), (1, 2.0, 21)]
    assert [p.strength for p in points] == [0.0, 2.0]


def test_beta_vs_g_records_unfittable_points():
    # a single step leaves one usable entry, too few for a power law
    (point,) = beta_vs_g([0.0], steps=1, replicates=10, seed=3)
    assert point == (0.0, None, None)
