"""
Tests for radial Green's functions
"""
# pylint: disable=unused-argument

import math
import warnings
import numpy as np
import pytest
from scipy import integrate, special

from radialis import greens
from radialis.exceptions import DomainError, NumericalError, ValidationError
from radialis.greens import (
    GreenProfile,
    ball_volume,
    euclidean_green,
    flux,
    fundamental_solution_defect,
    green_derivative,
    green_harmonicity_residual,
    green_value,
    sphere_area,
    unit_ball_volume,
)
from radialis.model_spaces import SpaceId, make_model, radial_grid


class TestUnitBall:
    """Test unit-ball volumes and sphere areas"""

    @pytest.mark.parametrize("d", range(1, 17))
    def test_matches_gamma_function(self, d):
        """Test pi^(d/2) / Gamma(d/2 + 1) against scipy"""
        expected = math.pi ** (d / 2) / special.gamma(d / 2 + 1)
        assert unit_ball_volume(d) == pytest.approx(expected, rel=1e-14)

    def test_known_values(self):
        """Test the circle, the 2-sphere and the 3-sphere"""
        assert sphere_area(2) == pytest.approx(2 * math.pi)
        assert sphere_area(3) == pytest.approx(4 * math.pi)
        assert sphere_area(4) == pytest.approx(2 * math.pi**2)

    def test_invalid_dimension(self):
        """Test that d < 1 is rejected"""
        with pytest.raises(ValidationError):
            unit_ball_volume(0)


class TestGreenDerivative:
    """Test G' and its checks over grids"""

    def test_euclidean_derivative(self):
        """Test G'(r) = 1/(4 pi r^2) on R3"""
        assert green_derivative(make_model(SpaceId.EUCLIDEAN, 3), 2.0) == pytest.approx(
            1.0 / (16.0 * math.pi)
        )

    def test_flux_is_one(self, small_spaces):
        """Test vol(dD_r) G'(r) = 1 within 1e-12"""
        for space in small_spaces:
            for r in radial_grid(space, 0.1, 3.0, 200):
                assert abs(flux(space, r) - 1.0) <= 1e-12, space.label

    def test_harmonic_away_from_pole(self, small_spaces):
        """Test |G'' + H G'| <= 1e-10 over r in [0.1, 3]"""
        for space in small_spaces:
            for r in radial_grid(space, 0.1, 3.0, 200):
                assert green_harmonicity_residual(space, r) <= 1e-10, space.label

    def test_green_is_increasing(self, small_spaces):
        """Test that G' is positive, so G increases with r"""
        for space in small_spaces:
            assert all(green_derivative(space, r) > 0 for r in radial_grid(space, 0.1, 3.0, 50))


class TestGreenValue:
    """Test anchored values of G by quadrature"""

    @pytest.mark.parametrize("r", [0.3, 1.0, 2.5, 4.0])
    def test_hyperbolic_plane_closed_form(self, r):
        """Test G(r) - G(r_ref) = log(tanh(r/2)/tanh(r_ref/2)) / 2pi on H2"""
        r_ref = 0.5
        expected = math.log(math.tanh(r / 2) / math.tanh(r_ref / 2)) / (2 * math.pi)
        assert abs(green_value(make_model(SpaceId.HYPERBOLIC, 2), r, r_ref) - expected) <= 1e-9

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_euclidean_closed_form(self, n):
        """Test that the Euclidean anchor reproduces the closed form"""
        space = make_model(SpaceId.EUCLIDEAN, n)
        assert abs(green_value(space, 2.0, 0.5) - euclidean_green(n, 2.0)) <= 1e-9
        assert green_value(space, 0.5, 0.5) == euclidean_green(n, 0.5)

    def test_plane_closed_form(self):
        """Test log r / 2pi on R2"""
        assert euclidean_green(2, math.e) == pytest.approx(1.0 / (2 * math.pi))

    def test_non_euclidean_anchor_is_zero(self):
        """Test G(r_ref) = 0 away from Euclidean space"""
        assert green_value(make_model(SpaceId.HYPERBOLIC, 3), 1.0, 1.0) == 0.0

    def test_sphere_cap(self):
        """Test that quadrature on the sphere stops at pi - cap"""
        sphere = make_model(SpaceId.SPHERE, 2)
        with pytest.raises(DomainError):
            green_value(sphere, math.pi - 1e-4, 1.0)
        assert math.isfinite(green_value(sphere, math.pi - 1e-2, 1.0))

    def test_missed_tolerance(self, mocker):
        """Test that a quadrature error above tolerance is a numerical error"""
        mocker.patch("radialis.greens.integrate.quad", return_value=(1.0, 0.5))
        with pytest.raises(NumericalError) as excinfo:
            green_value(make_model(SpaceId.HYPERBOLIC, 2), 2.0, 1.0)
        assert excinfo.value.achieved == 0.5

    def test_integration_warning(self, mocker):
        """Test that a scipy integration warning becomes a numerical error"""

        def warning_quad(*args, **kwargs):
            warnings.warn("roundoff error detected", integrate.IntegrationWarning)
            return (0.0, 0.0)

        mocker.patch("radialis.greens.integrate.quad", side_effect=warning_quad)
        with pytest.raises(NumericalError):
            green_value(make_model(SpaceId.HYPERBOLIC, 2), 2.0, 1.0)


class TestBallVolume:
    """Test vol(D_r) as the integral of 1/G'"""

    def test_euclidean(self):
        """Test 4/3 pi r^3 on R3"""
        assert ball_volume(make_model(SpaceId.EUCLIDEAN, 3), 1.5) == pytest.approx(
            4.0 / 3.0 * math.pi * 1.5**3, rel=1e-10
        )

    def test_hyperbolic_plane(self):
        """Test 2pi (cosh r - 1) on H2"""
        assert ball_volume(make_model(SpaceId.HYPERBOLIC, 2), 2.0) == pytest.approx(
            2 * math.pi * (math.cosh(2.0) - 1.0), rel=1e-10
        )

    def test_round_sphere(self):
        """Test 2pi (1 - cos r) on S2"""
        assert ball_volume(make_model(SpaceId.SPHERE, 2), 2.0) == pytest.approx(
            2 * math.pi * (1.0 - math.cos(2.0)), rel=1e-10
        )


class TestFundamentalSolution:
    """Test the two checkable consequences of Delta G = delta_p"""

    @pytest.mark.parametrize("eps, r", [(0.1, 1.0), (0.2, 2.5), (0.5, 0.9)])
    def test_defects_vanish(self, small_spaces, eps, r):
        """Test that both defects vanish on every small catalog space"""
        for space in small_spaces:
            integral, flux_change = fundamental_solution_defect(space, eps, r)
            assert abs(integral) <= 1e-9, space.label
            assert abs(flux_change) <= 1e-12, space.label


class TestGreenProfile:
    """Test the cached Green's function profile"""

    def test_values_are_cached(self, config, mocker):
        """Test that each radius is integrated once"""
        space = make_model(SpaceId.HYPERBOLIC, 3)
        profile = GreenProfile(space, 0.5, config)
        spy = mocker.spy(greens, "green_value")
        first = profile(1.5)
        second = profile.value(1.5)
        assert first == second
        assert spy.call_count == 1

    def test_derivative(self, config):
        """Test that the profile derivative is G'"""
        space = make_model(SpaceId.HYPERBOLIC, 2)
        profile = GreenProfile(space, 0.5, config)
        assert profile.derivative(1.0) == pytest.approx(1.0 / (2 * math.pi * math.sinh(1.0)))

    def test_profile_is_monotone(self, config):
        """Test that anchored values increase with r"""
        profile = GreenProfile(make_model(SpaceId.COMPLEX_HYPERBOLIC, 2), 0.5, config)
        values = [profile(r) for r in np.linspace(0.2, 3.0, 8)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_invalid_anchor(self, config):
        """Test that an anchor outside the domain is rejected"""
        with pytest.raises(DomainError):
            GreenProfile(make_model(SpaceId.SPHERE, 2), 3.5, config)
