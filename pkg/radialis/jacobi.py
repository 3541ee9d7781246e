"""
Jacobi fields along radial geodesics

Handles:
- Closed-form scalar Jacobi solutions s_K(r) of y'' = -K y, y(0) = 0, y'(0) = 1
- Theta(r) as the product of Jacobi solutions over a curvature spectrum
- Fixed-step fourth-order Runge-Kutta integration as a cross-check
- Principal curvatures s_K'/s_K of geodesic spheres
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from .exceptions import ConjugatePointError, DomainError, ValidationError
from .jets import Elementary, Jet2, jet_elementary
from .model_spaces import CurvatureSpectrum

logger = logging.getLogger(__name__)


def jacobi_solution(curvature: float, r: float) -> Jet2:
    """
    2-jet of the scalar Jacobi solution s_K(r)

    Args:
        curvature: Sectional curvature K
        r: Radius, positive and before the first conjugate point

    Raises:
        DomainError: r <= 0
        ConjugatePointError: K > 0 and r >= pi / sqrt(K)
    """
    if r <= 0.0:
        raise DomainError("Jacobi solutions are evaluated for r > 0", r)
    x = Jet2.variable(r)
    if curvature == 0.0:
        return x

    root = math.sqrt(abs(curvature))
    if curvature > 0.0:
        if root * r >= math.pi:
            raise ConjugatePointError(
                f"first conjugate point of K={curvature:g} is at {math.pi / root!r}", r
            )
        return jet_elementary(Elementary.SIN, x * root) / root
    return jet_elementary(Elementary.SINH, x * root, radius=r) / root


def theta_from_spectrum(spectrum: CurvatureSpectrum, r: float) -> Jet2:
    """
    2-jet of Theta(r) as the product of s_K(r)^mult over the spectrum

    Along a radial geodesic of a model space the Jacobi fields diagonalise, so
    the Gram determinant is a product of squares.
    """
    theta = Jet2.constant(1.0)
    for curvature, mult in spectrum.entries:
        theta = theta * jacobi_solution(curvature, r) ** mult
    return theta


def jacobi_integrate(curvature: float, r: float, step: float) -> float:
    """
    y(r) for y'' = -K y, y(0) = 0, y'(0) = 1 by classical fixed-step RK4

    The step is shrunk slightly so that an integer number of steps lands on r.

    Raises:
        ValidationError: step not in (0, r/10]
    """
    if not 0.0 < step <= r / 10.0:
        raise ValidationError(f"step must lie in (0, r/10], got {step!r} for r={r!r}")

    nstep = math.ceil(r / step - 1e-9)
    h = r / nstep

    def _rhs(y: np.ndarray) -> np.ndarray:
        return np.array([y[1], -curvature * y[0]])

    y = np.array([0.0, 1.0])
    for _ in range(nstep):
        k1 = _rhs(y)
        k2 = _rhs(y + 0.5 * h * k1)
        k3 = _rhs(y + 0.5 * h * k2)
        k4 = _rhs(y + h * k3)
        y = y + h * (k1 + 2.0 * (k2 + k3) + k4) / 6.0

    logger.debug("RK4 K=%g r=%g: %d steps of %.3e", curvature, r, nstep, h)
    return float(y[0])


def principal_curvature(curvature: float, r: float) -> float:
    """
    s_K'(r) / s_K(r) in closed form

    1/r, sqrt(K) cot(sqrt(K) r) or sqrt(-K) coth(sqrt(-K) r). s_K itself is
    never formed, so the ratio stays finite where s_K overflows or underflows.

    Raises:
        DomainError: r <= 0
        ConjugatePointError: K > 0 and r >= pi / sqrt(K)
    """
    if r <= 0.0:
        raise DomainError("Jacobi solutions are evaluated for r > 0", r)
    if curvature == 0.0:
        return 1.0 / r

    root = math.sqrt(abs(curvature))
    if curvature > 0.0:
        if root * r >= math.pi:
            raise ConjugatePointError(
                f"first conjugate point of K={curvature:g} is at {math.pi / root!r}", r
            )
        return root / math.tan(root * r)
    return root / math.tanh(root * r)


def shape_eigenvalues(spectrum: CurvatureSpectrum, r: float) -> List[Tuple[float, int]]:
    """
    Principal curvatures of the geodesic sphere of radius r with multiplicities

    Raises:
        ConjugatePointError: r at or beyond a conjugate point
    """
    return [(principal_curvature(curvature, r), mult) for curvature, mult in spectrum.entries]


def shape_eigenvalue_derivatives(
    spectrum: CurvatureSpectrum, r: float
) -> List[Tuple[float, float, int]]:
    """(kappa, kappa', mult) per spectrum entry, with kappa = s_K'/s_K"""
    result = []
    for curvature, mult in spectrum.entries:
        s = jacobi_solution(curvature, r)
        kappa = s.d1 / s.value
        result.append((kappa, s.d2 / s.value - kappa * kappa, mult))
    return result
