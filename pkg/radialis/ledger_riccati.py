"""
Ricci curvature of the model spaces, two ways

Handles:
- Ledger's formula Ric(p) = -3 omega_p''(0) by Richardson-extrapolated
  central differences on the even extension of omega
- The Riccati trace identity Ric = -tr h' - tr h^2 from principal curvatures
- The umbilicity defect tr h^2 - (tr h)^2 / (d - 1)
"""

import logging
from typing import List

from .exceptions import DomainError, NumericalError, ValidationError
from .jacobi import shape_eigenvalue_derivatives, shape_eigenvalues
from .model_spaces import CurvatureSpectrum, ModelSpace, omega

logger = logging.getLogger(__name__)

DEFAULT_LEDGER_STEP = 1e-2
DEFAULT_LEDGER_LEVELS = 2

# Agreement required between the last two Richardson columns
_CONVERGENCE_TOL = 1e-6


def omega_second_derivative_at_zero(
    space: ModelSpace,
    step: float = DEFAULT_LEDGER_STEP,
    levels: int = DEFAULT_LEDGER_LEVELS,
) -> float:
    """
    omega_p''(0) from the values of omega alone

    With omega(-h) = omega(h) the central difference is 2 (omega(h) - omega(0)) / h^2,
    whose error is even in h; each Richardson level removes one power of h^2.

    Raises:
        ValidationError: Non-positive step or depth
        NumericalError: The last two extrapolation columns disagree
    """
    if step <= 0.0 or levels < 1:
        raise ValidationError(f"invalid Richardson parameters step={step!r} levels={levels!r}")

    center = omega(space, 0.0).value
    steps = [step / 2**i for i in range(levels + 1)]
    table: List[List[float]] = [
        [2.0 * (omega(space, h).value - center) / (h * h) for h in steps]
    ]
    for level in range(1, levels + 1):
        factor = 4.0**level
        previous = table[-1]
        table.append(
            [
                (factor * previous[i + 1] - previous[i]) / (factor - 1.0)
                for i in range(len(previous) - 1)
            ]
        )

    estimate = table[-1][0]
    residual = abs(estimate - table[-2][-1])
    logger.debug(
        "omega''(0) on %s = %.12g (Richardson residual %.3e)", space.label, estimate, residual
    )
    if residual > _CONVERGENCE_TOL * max(1.0, abs(estimate)):
        raise NumericalError(
            f"Richardson extrapolation of omega''(0) on {space.label} did not converge",
            residual,
        )
    return estimate


def ledger_ricci(
    space: ModelSpace,
    step: float = DEFAULT_LEDGER_STEP,
    levels: int = DEFAULT_LEDGER_LEVELS,
) -> float:
    """Ric(p) = -3 omega_p''(0)"""
    return -3.0 * omega_second_derivative_at_zero(space, step, levels)


def _check_radius(space: ModelSpace, r: float) -> None:
    if not space.contains(r):
        raise DomainError(f"radius outside the domain of {space.label}", r)


def riccati_ricci(space: ModelSpace, r: float) -> float:
    """
    Radial Ricci curvature -tr h'(r) - tr h(r)^2 from the principal curvatures

    Raises:
        DomainError: r outside (0, r_max)
    """
    _check_radius(space, r)
    trace_derivative = 0.0
    trace_square = 0.0
    for kappa, kappa_prime, mult in shape_eigenvalue_derivatives(space.spectrum, r):
        trace_derivative += mult * kappa_prime
        trace_square += mult * kappa * kappa
    return -trace_derivative - trace_square


def spectrum_umbilicity_defect(spectrum: CurvatureSpectrum, r: float) -> float:
    """
    tr h^2 - (tr h)^2 / (d - 1) for any curvature spectrum

    Evaluated as the weighted spread of the principal curvatures about their
    mean, which is nonnegative term by term.
    """
    eigenvalues = shape_eigenvalues(spectrum, r)
    total = spectrum.total_multiplicity
    mean = sum(mult * kappa for kappa, mult in eigenvalues) / total
    return sum(mult * (kappa - mean) ** 2 for kappa, mult in eigenvalues)


def umbilicity_defect(space: ModelSpace, r: float) -> float:
    """
    Deviation of the geodesic sphere of radius r from being umbilic

    Raises:
        DomainError: r outside (0, r_max)
    """
    _check_radius(space, r)
    return spectrum_umbilicity_defect(space.spectrum, r)
