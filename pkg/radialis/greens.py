"""
Radial Green's functions

Handles:
- Unit-ball volumes and unit-sphere areas
- G'(r) = 1 / vol(dD_r) from the density of a model space
- Anchored values of G by adaptive quadrature
- Flux normalisation and harmonicity residuals of G
- Ball volumes vol(D_r) = integral of 1 / G'
"""

import logging
import math
import warnings
from typing import Callable, Dict, Optional, Tuple

from scipy import integrate

from .config import Config
from .exceptions import DomainError, NumericalError, ValidationError
from .jets import Jet2, JetOp, jet_combine
from .model_spaces import ModelSpace, SpaceId, density
from .radial_ops import mean_curvature

logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-10
DEFAULT_SPHERE_CAP = 1e-3


def _half_integer_gamma(m: int) -> float:
    """Gamma(m / 2) for a positive integer m, by exact recursion"""
    if m < 1:
        raise ValidationError(f"half-integer gamma needs m >= 1, got {m}")
    if m % 2 == 0:
        return float(math.factorial(m // 2 - 1))
    k = (m - 1) // 2
    # Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    return math.factorial(2 * k) * math.sqrt(math.pi) / (4**k * math.factorial(k))


def unit_ball_volume(d: int) -> float:
    """Volume of the unit ball in R^d, pi^(d/2) / Gamma(d/2 + 1)"""
    if d < 1:
        raise ValidationError(f"dimension must be positive, got {d}")
    return math.pi ** (d / 2) / _half_integer_gamma(d + 2)


def sphere_area(d: int) -> float:
    """Area of the unit (d-1)-sphere, d * omega_d"""
    return d * unit_ball_volume(d)


def green_derivative_jet(space: ModelSpace, r: float) -> Jet2:
    """Value and derivatives of G'(r) = 1 / (d omega_d Theta(r))"""
    area = Jet2.constant(sphere_area(space.d))
    return jet_combine(JetOp.DIV, Jet2.constant(1.0), area * density(space, r), radius=r)


def green_derivative(space: ModelSpace, r: float) -> float:
    """
    G'(r), the reciprocal of the area of the geodesic sphere of radius r

    Raises:
        DomainError: r outside (0, r_max)
    """
    return green_derivative_jet(space, r).value


def euclidean_green(d: int, r: float) -> float:
    """Closed-form Euclidean Green's function, log r / 2pi for d = 2"""
    if d == 2:
        return math.log(r) / (2.0 * math.pi)
    return r ** (2 - d) / ((2 - d) * sphere_area(d))


def _quad(
    integrand: Callable[[float], float], lower: float, upper: float, tol: float
) -> float:
    """Adaptive quadrature that fails loudly instead of warning"""
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(
                integrand, lower, upper, epsabs=tol, epsrel=tol, limit=200
            )
        except integrate.IntegrationWarning as e:
            raise NumericalError(
                f"quadrature on [{lower!r}, {upper!r}] did not converge: {e}"
            ) from e
    if abserr > max(tol, tol * abs(value)):
        raise NumericalError(
            f"quadrature on [{lower!r}, {upper!r}] missed its tolerance {tol:.1e}",
            abserr,
        )
    return value


def _check_quadrature_radius(space: ModelSpace, r: float, sphere_cap: float) -> None:
    if not space.contains(r):
        raise DomainError(f"radius outside the domain of {space.label}", r)
    if space.id is SpaceId.SPHERE and r > math.pi - sphere_cap:
        raise DomainError(
            f"quadrature on {space.label} is capped at pi - {sphere_cap:g}", r
        )


def green_value(
    space: ModelSpace,
    r: float,
    r_ref: float,
    tol: float = DEFAULT_QUAD_TOL,
    sphere_cap: float = DEFAULT_SPHERE_CAP,
) -> float:
    """
    G(r) as the integral of G' from r_ref

    The anchor G(r_ref) is the closed form on Euclidean space and 0 elsewhere.

    Raises:
        DomainError: r or r_ref outside the (capped) domain
        NumericalError: Quadrature did not converge
    """
    _check_quadrature_radius(space, r, sphere_cap)
    _check_quadrature_radius(space, r_ref, sphere_cap)
    anchor = euclidean_green(space.d, r_ref) if space.id is SpaceId.EUCLIDEAN else 0.0
    if r == r_ref:
        return anchor
    return anchor + _quad(lambda s: green_derivative(space, s), r_ref, r, tol)


def flux(space: ModelSpace, r: float) -> float:
    """vol(dD_r) * G'(r), identically 1"""
    area = sphere_area(space.d) * density(space, r).value
    return area * green_derivative(space, r)


def green_harmonicity_residual(space: ModelSpace, r: float) -> float:
    """|G''(r) + H(r) G'(r)|, zero away from the pole"""
    g = green_derivative_jet(space, r)
    return abs(g.d1 + mean_curvature(space, r) * g.value)


def ball_volume(
    space: ModelSpace,
    r: float,
    tol: float = DEFAULT_QUAD_TOL,
    sphere_cap: float = DEFAULT_SPHERE_CAP,
) -> float:
    """
    Volume of the geodesic ball of radius r, the integral of 1 / G'

    Raises:
        DomainError: r outside the (capped) domain
        NumericalError: Quadrature did not converge
    """
    _check_quadrature_radius(space, r, sphere_cap)
    area = sphere_area(space.d)
    return _quad(lambda s: area * density(space, s).value, 0.0, r, tol) if r else 0.0


def fundamental_solution_defect(
    space: ModelSpace,
    eps: float,
    r: float,
    tol: float = DEFAULT_QUAD_TOL,
    sphere_cap: float = DEFAULT_SPHERE_CAP,
) -> Tuple[float, float]:
    """
    The two checkable consequences of Delta G = delta_p on [eps, r]

    Returns:
        (integral of vol(dD_s) (G'' + H G') over [eps, r], flux(r) - flux(eps))
    """
    _check_quadrature_radius(space, eps, sphere_cap)
    _check_quadrature_radius(space, r, sphere_cap)
    area = sphere_area(space.d)

    def _integrand(s: float) -> float:
        g = green_derivative_jet(space, s)
        return area * density(space, s).value * (g.d1 + mean_curvature(space, s) * g.value)

    return _quad(_integrand, eps, r, tol), flux(space, r) - flux(space, eps)


class GreenProfile:
    """Anchored radial Green's function of one space with a value cache"""

    def __init__(self, space: ModelSpace, r_ref: float, config: Optional[Config] = None):
        self.space = space
        self.r_ref = r_ref
        self.config = config or Config()
        self.values: Dict[float, float] = {}
        _check_quadrature_radius(space, r_ref, self.config.SPHERE_CAP)

    def derivative(self, r: float) -> float:
        """G'(r)"""
        return green_derivative(self.space, r)

    def value(self, r: float) -> float:
        """G(r), computed once per radius"""
        if r not in self.values:
            self.values[r] = green_value(
                self.space,
                r,
                self.r_ref,
                tol=self.config.QUAD_TOL,
                sphere_cap=self.config.SPHERE_CAP,
            )
            logger.debug("G(%g) on %s = %.12g", r, self.space.label, self.values[r])
        return self.values[r]

    def __call__(self, r: float) -> float:
        return self.value(r)
