"""
Tests for Ricci curvature by Ledger's formula and the Riccati identity
"""

import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from radialis.exceptions import DomainError, NumericalError, ValidationError
from radialis.ledger_riccati import (
    ledger_ricci,
    omega_second_derivative_at_zero,
    riccati_ricci,
    spectrum_umbilicity_defect,
    umbilicity_defect,
)
from radialis.jacobi import shape_eigenvalues
from radialis.model_spaces import CurvatureSpectrum, SpaceId, make_model

R = sp.symbols("r", positive=True)


def _symbolic_omega(space):
    """omega_p(r) of a catalog space as a sympy expression"""
    n = space.n
    if space.id is SpaceId.EUCLIDEAN:
        return sp.Integer(1)
    if space.id is SpaceId.SPHERE:
        return (sp.sin(R) / R) ** (n - 1)
    if space.id is SpaceId.HYPERBOLIC:
        return (sp.sinh(R) / R) ** (n - 1)
    if space.id is SpaceId.COMPLEX_HYPERBOLIC:
        return (sp.sinh(R) / R) ** (2 * n - 1) * sp.cosh(R)
    return (sp.sinh(R) / R) ** (4 * n - 1) * sp.cosh(R) ** 3


def _series_second_derivative(space):
    """omega''(0) as twice the r^2 Taylor coefficient"""
    series = sp.series(_symbolic_omega(space), R, 0, 4).removeO()
    return float(2 * series.coeff(R, 2))


def _catalog_up_to_dimension(max_d):
    spaces = [
        make_model(space_id, n)
        for space_id in (SpaceId.EUCLIDEAN, SpaceId.SPHERE, SpaceId.HYPERBOLIC)
        for n in range(2, max_d + 1)
    ]
    spaces += [make_model(SpaceId.COMPLEX_HYPERBOLIC, n) for n in range(1, max_d // 2 + 1)]
    spaces += [make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, n) for n in range(1, max_d // 4 + 1)]
    return spaces


SERIES_SPACES = [
    make_model(SpaceId.SPHERE, 5),
    make_model(SpaceId.HYPERBOLIC, 7),
    make_model(SpaceId.COMPLEX_HYPERBOLIC, 1),
    make_model(SpaceId.COMPLEX_HYPERBOLIC, 3),
    make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, 1),
    make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, 2),
]


class TestLedger:
    """Test Ric = -3 omega''(0) by Richardson extrapolation"""

    @pytest.mark.parametrize("space", SERIES_SPACES, ids=lambda s: s.label)
    def test_matches_series_oracle(self, space):
        """Test omega''(0) against the symbolic Taylor coefficient"""
        expected = _series_second_derivative(space)
        assert abs(omega_second_derivative_at_zero(space) - expected) <= 1e-8

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_complex_hyperbolic_oracle(self, n):
        """Test omega ~ 1 + ((2n+2)/6) r^2 on CHn"""
        expected = _series_second_derivative(make_model(SpaceId.COMPLEX_HYPERBOLIC, n))
        assert expected == pytest.approx((2 * n + 2) / 3.0)

    def test_euclidean_is_flat(self):
        """Test that omega is constant on Euclidean space"""
        assert ledger_ricci(make_model(SpaceId.EUCLIDEAN, 4)) == 0.0

    def test_invalid_parameters(self):
        """Test that a non-positive step or depth is rejected"""
        space = make_model(SpaceId.HYPERBOLIC, 3)
        with pytest.raises(ValidationError):
            omega_second_derivative_at_zero(space, step=0.0)
        with pytest.raises(ValidationError):
            omega_second_derivative_at_zero(space, levels=0)

    def test_non_convergence(self):
        """Test that a coarse step fails the convergence check"""
        with pytest.raises(NumericalError) as excinfo:
            omega_second_derivative_at_zero(
                make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, 2), step=1.0, levels=1
            )
        assert excinfo.value.achieved > 0.0


class TestRiccati:
    """Test Ric = -tr h' - tr h^2"""

    def test_complex_hyperbolic(self):
        """Test that CH2 has radial Ricci curvature -6 at any radius"""
        space = make_model(SpaceId.COMPLEX_HYPERBOLIC, 2)
        for r in (0.1, 1.0, 3.0):
            assert riccati_ricci(space, r) == pytest.approx(-6.0, rel=1e-12)

    def test_outside_domain(self):
        """Test that the antipode is outside the sphere's domain"""
        with pytest.raises(DomainError):
            riccati_ricci(make_model(SpaceId.SPHERE, 3), math.pi)


class TestRicciBookkeeping:
    """Test that both routes reach the Einstein constant"""

    @pytest.mark.parametrize("space", _catalog_up_to_dimension(16), ids=lambda s: s.label)
    def test_ledger_agrees_with_riccati(self, space):
        """Test agreement within 1e-5 and the integer Einstein constant"""
        ledger = ledger_ricci(space)
        for r in np.linspace(0.1, 3.0, 50):
            assert abs(ledger - riccati_ricci(space, r)) <= 1e-5
        assert round(ledger) == round(space.einstein_constant)

    @pytest.mark.parametrize(
        "space_id, n, expected",
        [
            (SpaceId.SPHERE, 4, 3),
            (SpaceId.HYPERBOLIC, 5, -4),
            (SpaceId.EUCLIDEAN, 6, 0),
            (SpaceId.COMPLEX_HYPERBOLIC, 3, -8),
            (SpaceId.QUATERNIONIC_HYPERBOLIC, 2, -16),
        ],
    )
    def test_einstein_constants(self, space_id, n, expected):
        """Test n-1, -(n-1), 0, -(2n+2) and -(4n+8)"""
        assert round(ledger_ricci(make_model(space_id, n))) == expected


class TestUmbilicity:
    """Test the umbilicity defect of geodesic spheres"""

    @pytest.mark.parametrize(
        "space_id, n",
        [
            (SpaceId.EUCLIDEAN, 3),
            (SpaceId.SPHERE, 4),
            (SpaceId.HYPERBOLIC, 5),
            (SpaceId.COMPLEX_HYPERBOLIC, 1),
            (SpaceId.QUATERNIONIC_HYPERBOLIC, 1),
        ],
    )
    def test_single_curvature_is_umbilic(self, space_id, n):
        """Test a vanishing defect when the spectrum has one curvature"""
        space = make_model(space_id, n)
        for r in (0.2, 1.0, 2.5):
            assert umbilicity_defect(space, r) <= 1e-12

    @pytest.mark.parametrize(
        "space_id, n",
        [(SpaceId.COMPLEX_HYPERBOLIC, 2), (SpaceId.QUATERNIONIC_HYPERBOLIC, 2)],
    )
    def test_two_curvatures_are_not_umbilic(self, space_id, n):
        """Test a defect of at least 1e-3 at r = 1"""
        assert umbilicity_defect(make_model(space_id, n), 1.0) >= 1e-3

    @given(
        pairs=st.lists(
            st.tuples(
                st.floats(min_value=-9.0, max_value=2.0, allow_nan=False),
                st.integers(min_value=1, max_value=6),
            ),
            min_size=1,
            max_size=5,
        ),
        r=st.floats(min_value=0.05, max_value=2.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_defect_is_nonnegative(self, pairs, r):
        """Test tr h^2 >= (tr h)^2 / (d-1) for synthetic spectra"""
        spectrum = CurvatureSpectrum.from_pairs(pairs)
        defect = spectrum_umbilicity_defect(spectrum, r)
        assert defect >= 0.0

        eigenvalues = shape_eigenvalues(spectrum, r)
        trace = sum(mult * kappa for kappa, mult in eigenvalues)
        trace_square = sum(mult * kappa * kappa for kappa, mult in eigenvalues)
        expected = trace_square - trace * trace / spectrum.total_multiplicity
        assert defect == pytest.approx(expected, rel=1e-6, abs=1e-6 * trace_square)
