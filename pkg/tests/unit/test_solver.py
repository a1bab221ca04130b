"""
Unit tests for the spectral solvers

Tests heat, fractional and distributed-order series solutions, their error
contracts, the L1 Caputo scheme, and the residual checks built on it.
"""

import math

import numpy as np
import pytest

from fraccauchy.core.errors import DomainError, TruncationError
from fraccauchy.distorder import DensityPart, OrderMeasure
from fraccauchy.solver import (
    Engine,
    FieldSample,
    caputo_l1,
    convergence_rate,
    describe_order,
    eigen_residual,
    residual_check,
    solve,
    solve_distributed,
    solve_fractional,
    solve_heat,
    uniform_grid,
)
from fraccauchy.spectral import BoxDomain, Bump, ModeSum, project
from fraccauchy.specfun import MLQuery, gamma_fn, mittag_leffler


@pytest.fixture
def unit_interval():
    return BoxDomain.unit(1)


@pytest.fixture
def first_mode(unit_interval):
    return project(ModeSum.single((1,)), unit_interval, 16)


@pytest.fixture
def bump(unit_interval):
    return project(Bump(), unit_interval, 64)


POINTS = np.array([0.0, 0.2, 0.5, 0.9, 1.0])


def phi1(x):
    return math.sqrt(2.0) * np.sin(math.pi * np.asarray(x))


class TestSeriesSolutions:
    """Closed-form solutions for single-mode data."""

    def test_heat_single_mode(self, first_mode):
        sample = solve_heat(first_mode, 0.1, POINTS)
        np.testing.assert_allclose(sample.values, math.exp(-math.pi ** 2 * 0.1) * phi1(POINTS), atol=1e-15)
        assert sample.engine_tag is Engine.SPECTRAL
        assert sample.values[0] == 0.0 and sample.values[-1] == 0.0

    @pytest.mark.parametrize("beta", [0.3, 0.5, 0.8])
    def test_fractional_single_mode(self, first_mode, beta):
        """u = M_beta(-pi^2 t^beta) phi_1."""
        t = 0.4
        factor = mittag_leffler(MLQuery(beta, -math.pi ** 2 * t ** beta))
        sample = solve_fractional(first_mode, beta, t, POINTS)
        np.testing.assert_allclose(sample.values, factor * phi1(POINTS), rtol=1e-11, atol=1e-15)

    def test_unit_order_is_heat(self, bump):
        a = solve(bump, 1.0, 0.05, POINTS)
        b = solve_heat(bump, 0.05, POINTS)
        np.testing.assert_array_equal(a.values, b.values)

    def test_single_atom_measure_matches_fractional(self, first_mode):
        """The distributed solver with a unit Caputo atom reproduces the fractional solution."""
        beta, t = 0.5, 0.3
        dist = solve_distributed(first_mode, OrderMeasure.single(beta), t, POINTS)
        frac = solve_fractional(first_mode, beta, t, POINTS)
        np.testing.assert_allclose(dist.values, frac.values, atol=1e-7)
        assert dist.tail_bound <= 1e-7

    def test_dispatch_on_measure(self, first_mode):
        m = OrderMeasure(atoms=((0.3, 0.5), (0.7, 0.5)))
        assert np.array_equal(solve(first_mode, m, 0.2, POINTS).values, solve_distributed(first_mode, m, 0.2, POINTS).values)

    @pytest.mark.parametrize("order", [0.5, OrderMeasure(atoms=((0.3, 0.5), (0.7, 0.5)))], ids=["fractional", "two-atoms"])
    def test_linear_in_initial_data(self, unit_interval, order):
        """u[a f + b g] = a u[f] + b u[g] on the same modes."""
        f = project(Bump(), unit_interval, 16)
        g = project(ModeSum(terms=(((2,), 1.0), ((3,), -0.5))), unit_interval, 16)
        a, b, t = 1.5, -0.75, 0.3
        mixed = solve(f.combine(g, a, b), order, t, POINTS)
        u_f = solve(f, order, t, POINTS)
        u_g = solve(g, order, t, POINTS)
        np.testing.assert_allclose(mixed.values, a * u_f.values + b * u_g.values, rtol=0.0, atol=1e-13)
        assert mixed.tail_bound <= (abs(a) * u_f.tail_bound + abs(b) * u_g.tail_bound) * (1.0 + 1e-12) + 1e-15

    def test_bad_time_and_order(self, first_mode):
        with pytest.raises(DomainError):
            solve_fractional(first_mode, 0.5, 0.0, POINTS)
        with pytest.raises(DomainError):
            solve_fractional(first_mode, 1.5, 0.1, POINTS)


class TestErrorContract:
    """Tail bounds and physical properties of bump solutions."""

    @pytest.mark.parametrize("beta", [0.3, 0.5, 1.0])
    def test_tail_within_tolerance(self, bump, beta):
        sample = solve(bump, beta, 0.1, np.linspace(0.0, 1.0, 21))
        assert sample.tail_bound <= 1e-4

    def test_truncation_error_raised(self, unit_interval):
        """Two modes cannot resolve the bump at t = 1e-3."""
        coeffs = project(Bump(), unit_interval, 2)
        with pytest.raises(TruncationError) as excinfo:
            solve_fractional(coeffs, 0.5, 1e-3, POINTS)
        assert excinfo.value.tail_bound > excinfo.value.tolerance

    def test_looser_tolerance_accepts(self, unit_interval):
        coeffs = project(Bump(), unit_interval, 2)
        sample = solve_fractional(coeffs, 0.5, 1e-3, POINTS, tolerance=0.1)
        assert sample.tail_bound <= 0.1

    @pytest.mark.parametrize("beta", [0.3, 0.7])
    def test_positive_and_bounded(self, bump, beta):
        """Nonnegative data stays nonnegative and below sup f = 1/4."""
        x = np.linspace(0.0, 1.0, 41)
        sample = solve(bump, beta, 0.2, x)
        assert np.all(sample.values >= -sample.tail_bound)
        assert np.all(sample.values <= 0.25 + sample.tail_bound)

    def test_slower_decay_for_smaller_order(self, bump):
        """At a time past the crossover, smaller orders decay more slowly."""
        slow = solve(bump, 0.3, 2.0, [0.5]).values[0]
        fast = solve(bump, 0.8, 2.0, [0.5]).values[0]
        heat = solve(bump, 1.0, 2.0, [0.5]).values[0]
        assert slow > fast > heat > 0.0


class TestCaputo:
    """L1 scheme."""

    def test_exact_for_linear(self):
        """D^beta t = t^(1 - beta) / Gamma(2 - beta), reproduced exactly by L1."""
        beta, dt = 0.4, 0.01
        t = uniform_grid(dt, 1.0)
        np.testing.assert_allclose(caputo_l1(t, beta, dt), t ** (1.0 - beta) / gamma_fn(2.0 - beta), rtol=1e-12, atol=1e-15)

    def test_constant_has_zero_derivative(self):
        assert np.all(caputo_l1(np.full(10, 3.0), 0.5, 0.1) == 0.0)

    def test_bad_input(self):
        with pytest.raises(DomainError):
            caputo_l1(np.ones(2), 0.5, 0.1)
        with pytest.raises(DomainError):
            caputo_l1(np.ones(5), 1.0, 0.1)
        with pytest.raises(DomainError):
            caputo_l1(np.ones(5), 0.5, 0.0)

    def test_uniform_grid(self):
        grid = uniform_grid(0.25, 1.0)
        np.testing.assert_allclose(grid, [0.0, 0.25, 0.5, 0.75, 1.0])
        with pytest.raises(DomainError):
            uniform_grid(0.3, 1.0)
        with pytest.raises(DomainError):
            uniform_grid(0.5, 0.5)


class TestResidual:
    """Caputo residuals of assembled solutions."""

    @pytest.mark.parametrize("beta", [0.3, 0.5])
    def test_eigen_residual_shrinks(self, beta):
        coarse = eigen_residual(beta, 10.0, 4e-3)
        fine = eigen_residual(beta, 10.0, 2e-3)
        assert fine < coarse
        assert convergence_rate(coarse, fine) > 1.0

    def test_heat_residual_first_order(self, first_mode):
        """Backward differences of exp(-pi^2 t) leave a residual of about pi^4 dt / 2 that halves with dt."""
        coarse = residual_check(first_mode, 1.0, uniform_grid(0.01, 1.0), [0.3, 0.5])
        fine = residual_check(first_mode, 1.0, uniform_grid(0.005, 1.0), [0.3, 0.5])
        assert 0.0 < fine.max_residual < coarse.max_residual <= math.pi ** 4 * 0.01
        assert convergence_rate(coarse.max_residual, fine.max_residual) == pytest.approx(1.0, abs=0.1)

    def test_fractional_residual_small(self, unit_interval):
        coeffs = project(ModeSum(terms=(((1,), 1.0), ((2,), 0.5))), unit_interval, 4)
        coarse = residual_check(coeffs, 0.5, uniform_grid(2e-3, 1.0), [0.2, 0.5, 0.7])
        fine = residual_check(coeffs, 0.5, uniform_grid(1e-3, 1.0), [0.2, 0.5, 0.7])
        assert fine.max_residual < coarse.max_residual
        assert (fine.dt, fine.t_min, fine.t_max) == (1e-3, 0.1, 1.0)

    def test_distributed_residual_shrinks(self, first_mode):
        m = OrderMeasure(atoms=((0.3, 0.5), (0.7, 0.5)))
        coarse = residual_check(first_mode, m, uniform_grid(2e-2, 1.0), [0.5])
        fine = residual_check(first_mode, m, uniform_grid(1e-2, 1.0), [0.5])
        assert fine.max_residual < coarse.max_residual

    def test_grid_must_start_at_zero(self, first_mode):
        with pytest.raises(DomainError):
            residual_check(first_mode, 0.5, 0.1 + uniform_grid(0.01, 1.0), [0.5])

    def test_convergence_rate(self):
        assert convergence_rate(4.0, 1.0) == pytest.approx(2.0)
        assert convergence_rate(1.0, 0.0) == math.inf


def test_field_sample_shape_check():
    """Values must match the number of points."""
    with pytest.raises(ValueError):
        FieldSample(t=1.0, points=np.zeros((3, 1)), values=np.zeros(2), tail_bound=0.0)


def test_describe_order():
    assert describe_order(0.5) == "beta=0.5"
    m = OrderMeasure(density=DensityPart(0.25, 0.75, 64))
    assert describe_order(m).startswith("density(uniform")
