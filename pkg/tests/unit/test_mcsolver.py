"""
Unit tests for the Monte-Carlo engine

Tests run settings, the block driver's thread-count independence, killed
Brownian motion, and the estimators against spectral solutions.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from fraccauchy.core.errors import ConfigError, DomainError
from fraccauchy.distorder import DensityPart, OrderMeasure
from fraccauchy.mcsolver import (
    McConfig,
    bias_allowance,
    block_sizes,
    mc_field,
    mc_solve,
    mc_solve_distributed,
    run_blocks,
    run_killed_bm,
    run_killed_bm_batch,
)
from fraccauchy.solver import Engine, solve
from fraccauchy.spectral import BoxDomain, ModeSum, project
from fraccauchy.subord import RngStream


@pytest.fixture
def unit_interval():
    return BoxDomain.unit(1)


@pytest.fixture
def first_mode():
    return ModeSum.single((1,))


@pytest.fixture
def small_run():
    return McConfig(n_paths=20_000, dt=1e-4, seed=11, block_size=2_000, threads=1)


def survival_probability(x: float, s: float) -> float:
    """P(BM with generator Laplacian from x stays in (0, 1) up to s)."""
    return sum(4.0 / (n * math.pi) * math.sin(n * math.pi * x) * math.exp(-(n * math.pi) ** 2 * s) for n in range(1, 200, 2))


class TestConfig:
    """McConfig limits."""

    def test_path_floor(self):
        with pytest.raises(ValidationError):
            McConfig(n_paths=10)

    def test_step_limit(self, unit_interval):
        """dt must stay below 1e-2 / mu_1."""
        McConfig(dt=1e-3).check_for(unit_interval)
        with pytest.raises(ConfigError):
            McConfig(dt=2e-3).check_for(unit_interval)

    def test_resource_cap(self, unit_interval):
        with pytest.raises(ConfigError):
            McConfig(n_paths=10_000_000, budget=1_000_000).check_for(unit_interval)

    def test_frozen(self):
        cfg = McConfig()
        with pytest.raises(ValidationError):
            cfg.seed = 3


class TestEngine:
    """Block driver."""

    def test_block_sizes(self):
        assert block_sizes(10, 4) == [4, 4, 2]
        assert block_sizes(8, 4) == [4, 4]

    def test_thread_count_does_not_change_result(self):
        def block(r, size):
            return r.normal(size)

        one = run_blocks(block, 10_000, seed=5, block_size=1_000, threads=1)
        many = run_blocks(block, 10_000, seed=5, block_size=1_000, threads=4)
        assert (one.mean, one.std_error, one.n) == (many.mean, many.std_error, many.n)

    def test_base_stream_shifts_draws(self):
        def block(r, size):
            return r.normal(size)

        a = run_blocks(block, 1_000, seed=5, block_size=500)
        b = run_blocks(block, 1_000, seed=5, block_size=500, base_stream=1 << 32)
        assert a.mean != b.mean


class TestKilledBrownianMotion:
    """Killed Brownian motion on the box."""

    def test_zero_clock(self, unit_interval, small_run):
        alive, end = run_killed_bm(unit_interval, (0.3,), 0.0, small_run, RngStream(1))
        assert alive
        np.testing.assert_array_equal(end, [0.3])

    def test_start_must_be_interior(self, unit_interval, small_run):
        with pytest.raises(DomainError):
            run_killed_bm(unit_interval, (0.0,), 0.1, small_run, RngStream(1))

    def test_negative_clock(self, unit_interval):
        with pytest.raises(DomainError):
            run_killed_bm_batch(unit_interval, (0.5,), np.array([-1.0]), 1e-4, RngStream(1), 100)

    def test_survival(self, unit_interval):
        """Fraction of surviving paths matches the spectral survival probability."""
        n, s, dt = 20_000, 0.05, 2.5e-5
        alive, _ = run_killed_bm_batch(unit_interval, (0.5,), np.full(n, s), dt, RngStream(2), 10_000)
        p = survival_probability(0.5, s)
        assert abs(alive.mean() - p) <= 4.0 * math.sqrt(p * (1.0 - p) / n) + math.sqrt(dt)

    def test_increment_variance(self):
        """Far from the walls each coordinate moves by N(0, 2 s), including a short final step."""
        wide = BoxDomain((100.0, 100.0))
        n, s, dt = 20_000, 0.505, 1e-2
        alive, end = run_killed_bm_batch(wide, (50.0, 50.0), np.full(n, s), dt, RngStream(3), 1_000)
        assert alive.all()
        moves = end - 50.0
        np.testing.assert_allclose(moves.mean(axis=0), 0.0, atol=4.0 * math.sqrt(2.0 * s / n))
        np.testing.assert_allclose(moves.var(axis=0), 2.0 * s, atol=4.0 * 2.0 * s * math.sqrt(2.0 / n))
        assert abs(np.mean(moves[:, 0] * moves[:, 1])) <= 4.0 * 2.0 * s / math.sqrt(n)


class TestEstimators:
    """Estimators against spectral solutions."""

    def test_heat_matches_spectral(self, unit_interval, first_mode, small_run):
        spectral = solve(project(first_mode, unit_interval, 8), 1.0, 0.05, [0.5]).values[0]
        summary = mc_solve(first_mode, unit_interval, 1.0, 0.05, (0.5,), small_run)
        assert summary.within(spectral, sigmas=4.0, slack=bias_allowance(1.0, small_run))

    def test_fractional_matches_spectral(self, unit_interval, first_mode, small_run):
        spectral = solve(project(first_mode, unit_interval, 8), 0.5, 0.1, [0.5]).values[0]
        summary = mc_solve(first_mode, unit_interval, 0.5, 0.1, (0.5,), small_run)
        assert summary.within(spectral, sigmas=4.0, slack=bias_allowance(0.5, small_run))

    def test_single_atom_clock_matches_fractional(self, unit_interval, first_mode, small_run):
        """A unit Caputo atom drives the composite walk with the law of the inverse stable clock."""
        beta, t = 0.5, 0.1
        walk = mc_solve_distributed(first_mode, unit_interval, OrderMeasure.single(beta), t, (0.5,), small_run)
        direct = mc_solve(first_mode, unit_interval, beta, t, (0.5,), small_run.model_copy(update={"seed": 12}))
        spread = math.hypot(walk.std_error, direct.std_error)
        assert abs(walk.mean - direct.mean) <= 4.0 * spread + bias_allowance(OrderMeasure.single(beta), small_run)

    def test_two_atoms_match_spectral(self, unit_interval, first_mode, small_run):
        m = OrderMeasure(atoms=((0.3, 0.5), (0.7, 0.5)))
        spectral = solve(project(first_mode, unit_interval, 8), m, 0.1, [0.5]).values[0]
        summary = mc_solve_distributed(first_mode, unit_interval, m, 0.1, (0.5,), small_run)
        assert summary.within(spectral, sigmas=4.0, slack=bias_allowance(m, small_run))

    def test_distributed_needs_atoms(self, unit_interval, first_mode, small_run):
        m = OrderMeasure(density=DensityPart(0.25, 0.75, 64))
        with pytest.raises(DomainError):
            mc_solve_distributed(first_mode, unit_interval, m, 0.1, (0.5,), small_run)

    def test_bias_allowance(self, small_run):
        assert bias_allowance(0.5, small_run) == pytest.approx(1e-2)
        m = OrderMeasure(atoms=((0.3, 0.5), (0.7, 0.5)))
        assert bias_allowance(m, small_run) == pytest.approx(1e-2 + 1e-3)

    def test_field_independent_of_threads(self, unit_interval, first_mode):
        """Same seed gives bitwise-identical fields for 1 and 4 threads."""
        points = [0.0, 0.25, 0.5, 1.0]
        cfg = McConfig(n_paths=4_000, dt=1e-4, seed=3, block_size=1_000, threads=1)
        one = mc_field(first_mode, unit_interval, 0.5, 0.1, points, cfg)
        many = mc_field(first_mode, unit_interval, 0.5, 0.1, points, cfg.model_copy(update={"threads": 4}))
        assert np.array_equal(one.values, many.values)
        assert np.array_equal(one.stderr, many.stderr)
        assert one.engine_tag is Engine.MONTECARLO
        assert one.values[0] == 0.0 and one.values[-1] == 0.0
        assert one.stderr[1] > 0.0
