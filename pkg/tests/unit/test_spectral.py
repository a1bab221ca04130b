"""
Unit tests for the spectral layer

Tests Dirichlet eigenpairs on boxes, projection of initial data, tail bounds,
and the killed semigroup and heat kernel series.
"""

import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss

from fraccauchy.core.errors import ConfigError, DomainError, TruncationError
from fraccauchy.spectral import (
    BoxDomain,
    Bump,
    CallableData,
    ModeSum,
    SpectralCoefficients,
    eigenfunction,
    eigenvalue,
    heat_kernel,
    heat_tail,
    inverse_square_tail,
    parse_initial,
    project,
    semigroup_apply,
    tail_mode_bound,
)


@pytest.fixture
def unit_interval():
    return BoxDomain.unit(1)


@pytest.fixture
def rectangle():
    return BoxDomain((1.0, 2.0))


def gauss_inner(dom, f, g, nodes=80):
    """Tensor Gauss-Legendre inner product on a box."""
    axes, weights = [], []
    for length in dom.lengths:
        x, w = leggauss(nodes)
        axes.append(0.5 * length * (x + 1.0))
        weights.append(0.5 * length * w)
    mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, dom.d)
    w = np.ones(())
    for wi in weights:
        w = np.multiply.outer(w, wi)
    return float(np.sum(w.ravel() * f(mesh) * g(mesh)))


class TestDomain:
    """Boxes and eigenpairs."""

    @pytest.mark.parametrize("lengths", [(), (1.0, 1.0, 1.0, 1.0), (1.0, -2.0), (0.0,)])
    def test_invalid_boxes(self, lengths):
        with pytest.raises(DomainError):
            BoxDomain(lengths)

    def test_eigenvalues(self, unit_interval, rectangle):
        assert eigenvalue(unit_interval, 1) == pytest.approx(math.pi ** 2)
        assert eigenvalue(rectangle, (1, 2)) == pytest.approx(2.0 * math.pi ** 2)
        with pytest.raises(DomainError):
            eigenvalue(rectangle, 1)
        with pytest.raises(DomainError):
            eigenvalue(unit_interval, 0)

    def test_eigenfunction_boundary_zero(self, rectangle):
        """phi_n vanishes exactly on the boundary."""
        boundary = np.array([[0.0, 0.7], [1.0, 0.3], [0.4, 0.0], [0.4, 2.0]])
        assert np.all(eigenfunction(rectangle, (2, 3), boundary) == 0.0)

    def test_single_point_returns_float(self, rectangle):
        value = eigenfunction(rectangle, (1, 1), [0.5, 1.0])
        assert isinstance(value, float)
        assert value == pytest.approx(math.sqrt(2.0) * 1.0)

    def test_outside_box(self, unit_interval):
        with pytest.raises(DomainError):
            eigenfunction(unit_interval, 1, 1.5)

    def test_orthonormal(self, rectangle):
        """Test <phi_m, phi_n> = delta_mn by quadrature."""
        modes = [(1, 1), (2, 1), (1, 3)]
        for m in modes:
            for n in modes:
                inner = gauss_inner(
                    rectangle,
                    lambda p, m=m: eigenfunction(rectangle, m, p),
                    lambda p, n=n: eigenfunction(rectangle, n, p),
                )
                assert inner == pytest.approx(1.0 if m == n else 0.0, abs=1e-12)


class TestInitialData:
    """Initial data families and projection."""

    def test_parse_forms(self, rectangle):
        assert parse_initial("mode 2 1", rectangle) == ModeSum.single((2, 1))
        assert parse_initial("bump 3", rectangle) == Bump(3.0)
        f = parse_initial("sum 1:1,1 0.5:2,3", rectangle)
        assert f.terms == (((1, 1), 1.0), ((2, 3), 0.5))

    @pytest.mark.parametrize("text", ["", "mode 1", "mode 0 1", "bump x", "bump 1 2", "sum", "sum 1-1,1", "wave 1"])
    def test_parse_errors(self, rectangle, text):
        with pytest.raises(ConfigError):
            parse_initial(text, rectangle)

    def test_mode_sum_coefficients(self, unit_interval):
        """Modes past the cap move into the l1 tail."""
        coeffs = project(parse_initial("sum 1:1 0.5:2 0.25:9", unit_interval), unit_interval, 4)
        np.testing.assert_array_equal(coeffs.coeffs, [1.0, 0.5, 0.0, 0.0])
        assert coeffs.tail_l1 == 0.25
        assert coeffs.tail_exact

    def test_bump_closed_form_matches_quadrature(self, rectangle):
        """Closed-form bump coefficients agree with a tensor Gauss-Legendre projection."""
        closed = project(Bump(), rectangle, (6, 6))
        quad = project(
            CallableData(lambda p: np.prod(p * (np.array([1.0, 2.0]) - p), axis=1), name="bump-quad"),
            rectangle,
            (6, 6),
        )
        np.testing.assert_allclose(quad.coeffs, closed.coeffs, atol=1e-10)
        assert not quad.tail_exact

    def test_bump_tail_accounts_for_every_mode(self, unit_interval):
        """Resolved plus tail l1 mass is the full l1 norm of the coefficients."""
        total = math.sqrt(2.0) * 4.0 / math.pi ** 3 * sum(n ** -3.0 for n in range(1, 200_001, 2))
        for cap in (4, 16, 64):
            coeffs = project(Bump(), unit_interval, cap)
            assert coeffs.abs_sum + coeffs.tail_l1 == pytest.approx(total, rel=1e-9)

    def test_bessel_inequality(self, rectangle):
        coeffs = project(Bump(2.0), rectangle, (8, 8))
        assert float(np.sum(coeffs.coeffs ** 2)) <= coeffs.l2_norm_sq

    def test_nonnegative_flags(self):
        assert Bump().nonnegative
        assert ModeSum.single((1,)).nonnegative
        assert not ModeSum.single((2,)).nonnegative

    def test_combine(self, unit_interval):
        a = project(ModeSum.single((1,)), unit_interval, 4)
        b = project(ModeSum.single((3,)), unit_interval, 4)
        np.testing.assert_array_equal(a.combine(b, 2.0, -1.0).coeffs, [2.0, 0.0, -1.0, 0.0])


class TestTails:
    """Bounds on the truncated parts of series."""

    def test_tail_mode_bound(self):
        assert tail_mode_bound(BoxDomain.unit(2), (4, 4)) == pytest.approx(26.0 * math.pi ** 2)

    @pytest.mark.parametrize("t", [1e-3, 1e-2, 0.1])
    def test_heat_tail_dominates_sum(self, unit_interval, t):
        k = np.arange(17, 20_000)
        actual = float(np.sum(np.exp(-(math.pi * k) ** 2 * t)))
        bound = heat_tail(unit_interval, t, (16,))
        assert actual <= bound

    def test_inverse_square_tail_dominates_sum(self, unit_interval):
        k = np.arange(9, 200_000, dtype=float)
        actual = float(np.sum((math.pi * k) ** -4.0))
        assert inverse_square_tail(unit_interval, (8,)) >= actual


class TestSeries:
    """Killed semigroup and heat kernel."""

    def test_semigroup_single_mode(self, unit_interval):
        """T(t) phi_1 = exp(-pi^2 t) phi_1 with no tail."""
        coeffs = project(ModeSum.single((1,)), unit_interval, 8)
        result = semigroup_apply(coeffs, 0.1, 0.3)
        expected = math.exp(-math.pi ** 2 * 0.1) * math.sqrt(2.0) * math.sin(0.3 * math.pi)
        assert result.value == pytest.approx(expected, rel=1e-13)
        assert result.tail_bound == 0.0

    def test_semigroup_needs_positive_time(self, unit_interval):
        coeffs = project(Bump(), unit_interval, 8)
        with pytest.raises(DomainError):
            semigroup_apply(coeffs, 0.0, 0.5)

    def test_heat_kernel_symmetric(self, rectangle):
        a = heat_kernel(rectangle, 0.05, [0.2, 0.5], [0.6, 1.5])
        b = heat_kernel(rectangle, 0.05, [0.6, 1.5], [0.2, 0.5])
        assert a.value == pytest.approx(b.value, rel=1e-13)
        assert a.value > 0.0

    def test_heat_kernel_boundary_zero(self, unit_interval):
        assert heat_kernel(unit_interval, 0.05, 0.0, 0.4).value == 0.0

    def test_heat_kernel_mass_below_one(self, unit_interval):
        """int p_D(t, x, y) dy is a survival probability."""
        x, w = leggauss(200)
        ys = 0.5 * (x + 1.0)
        mass = sum(0.5 * wi * heat_kernel(unit_interval, 0.02, 0.5, y).value for y, wi in zip(ys, w))
        assert 0.9 < mass < 1.0

    def test_truncation_error(self, unit_interval):
        """Too few modes at a tiny time raise instead of returning a wrong value."""
        with pytest.raises(TruncationError):
            heat_kernel(unit_interval, 1e-6, 0.5, 0.5, n=4)

    @pytest.mark.parametrize("x,y", [(0.5, 0.5), (0.3, 0.6), (0.05, 0.9)])
    def test_heat_kernel_method_of_images(self, unit_interval, x, y):
        """On (0, 1) the series equals sum_k g(x - y + 2k) - g(x + y + 2k), g the free kernel of Delta."""
        t = 0.1
        shifts = 2.0 * np.arange(-10, 11)

        def free(z):
            return np.exp(-z ** 2 / (4.0 * t)) / math.sqrt(4.0 * math.pi * t)

        images = float(np.sum(free(x - y + shifts) - free(x + y + shifts)))
        result = heat_kernel(unit_interval, t, x, y, n=40)
        assert result.value == pytest.approx(images, abs=1e-8)
        assert result.tail_bound < 1e-8

    @pytest.mark.parametrize("dom_name", ["unit_interval", "rectangle"])
    def test_semigroup_composes(self, dom_name, request):
        """T(t + s) f = T(t) (T(s) f), with T(s) f taken on the same truncated modes."""
        dom = request.getfixturevalue(dom_name)
        coeffs = project(Bump(), dom, 24)
        t, s = 0.03, 0.05
        evolved = SpectralCoefficients(
            domain=dom,
            max_mode=coeffs.max_mode,
            coeffs=coeffs.coeffs * np.exp(-coeffs.eigenvalues * s),
            source_tag=f"T({s:g}) {coeffs.source_tag}",
            tail_l1=coeffs.tail_l1 * math.exp(-coeffs.mu_tail * s),
            tail_exact=coeffs.tail_exact,
        )
        for point in ([0.2] * dom.d, [0.5] * dom.d, [0.1, 1.7][: dom.d]):
            direct = semigroup_apply(coeffs, t + s, point)
            composed = semigroup_apply(evolved, t, point)
            assert composed.value == pytest.approx(direct.value, abs=1e-13 + direct.tail_bound + composed.tail_bound)
