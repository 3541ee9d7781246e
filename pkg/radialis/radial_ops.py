"""
Radial Laplacian and mean curvature

Handles:
- Mean curvature H(r) = Theta'(r) / Theta(r) of geodesic spheres, summed from
  principal curvatures
- The radial Laplacian f'' + H f'
- Eigenfunction claims and their residuals over a grid
- Inverting an eigenfunction claim into the mean curvature it forces
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .exceptions import CriticalPointError, DomainError, RadialisError, ValidationError
from .jacobi import shape_eigenvalues
from .model_spaces import (
    ModelSpace,
    RadialFunction,
    SpaceId,
    cos_function,
    cosh_function,
    hypergeometric_function,
    log_function,
    power_function,
)

logger = logging.getLogger(__name__)

DEFAULT_CRITICAL_THRESHOLD = 1e-12

CLAIM_IDS = ("r2", "green", "log", "cos", "cosh", "sinh2")


@dataclass(frozen=True)
class EigenClaim:
    """The claim Delta f = lam * f + constant on a model space"""

    space: ModelSpace
    f: RadialFunction
    lam: float
    constant: float = 0.0
    claim_id: Optional[str] = None

    def __post_init__(self) -> None:
        if not (np.isfinite(self.lam) and np.isfinite(self.constant)):
            raise ValidationError("eigenvalue and constant must be finite")

    def describe(self) -> str:
        """Human-readable form of the claim"""
        rhs = f"{self.lam:g} f"
        if self.constant:
            rhs = f"{self.constant:g}" if self.lam == 0 else f"{rhs} + {self.constant:g}"
        return f"Delta({self.f.label}) = {rhs} on {self.space.label}"


def mean_curvature(space: ModelSpace, r: float) -> float:
    """
    Mean curvature of the geodesic sphere of radius r

    Theta'/Theta is the trace of the shape operator, sum of mult * s_K'/s_K over
    the curvature spectrum; Theta is never formed.

    Raises:
        DomainError: r outside (0, r_max)
    """
    if not space.contains(r):
        raise DomainError(f"radius outside the domain of {space.label}", r)
    return sum(mult * kappa for kappa, mult in shape_eigenvalues(space.spectrum, r))


def radial_laplacian(space: ModelSpace, f: RadialFunction, r: float) -> float:
    """
    Laplacian of a radial function, f''(r) + H(r) f'(r)

    Raises:
        DomainError: r outside the space's domain, or f fails to evaluate
    """
    H = mean_curvature(space, r)
    try:
        jet = f.eval(r)
    except RadialisError as e:
        e.add_note(f"evaluating {f.label} on {space.label}")
        raise
    return jet.d2 + H * jet.d1


def eigen_residual(claim: EigenClaim, grid: Iterable[float]) -> float:
    """
    Largest |Delta f - lam f - constant| over a grid

    Raises:
        ValidationError: Empty grid
        DomainError: A grid point outside the space's domain
    """
    radii = np.asarray(list(grid), dtype=float)
    if radii.size == 0:
        raise ValidationError("eigen_residual requires a nonempty grid")

    residuals = np.array(
        [
            radial_laplacian(claim.space, claim.f, r)
            - claim.lam * claim.f.eval(r).value
            - claim.constant
            for r in radii
        ]
    )
    worst = float(np.max(np.abs(residuals)))
    logger.debug("%s: max residual %.3e over %d points", claim.describe(), worst, radii.size)
    return worst


def recover_mean_curvature(
    f: RadialFunction,
    lam: float,
    r: float,
    constant: float = 0.0,
    threshold: float = DEFAULT_CRITICAL_THRESHOLD,
) -> float:
    """
    Mean curvature any harmonic manifold must have if Delta f = lam f + constant

    Returns:
        (lam f(r) + constant - f''(r)) / f'(r)

    Raises:
        CriticalPointError: |f'(r)| below threshold
    """
    jet = f.eval(r)
    if abs(jet.d1) < threshold:
        raise CriticalPointError(f"{f.label} has a critical point", r)
    return (lam * jet.value + constant - jet.d2) / jet.d1


def power_rule_rhs(space: ModelSpace, f: RadialFunction, k: int, r: float) -> float:
    """k(k-1) f^(k-2) |f'|^2 + k f^(k-1) Delta f, the Laplacian of f^k"""
    jet = f.eval(r)
    return k * (k - 1) * jet.value ** (k - 2) * jet.d1**2 + k * jet.value ** (
        k - 1
    ) * radial_laplacian(space, f, r)


def make_claim(space: ModelSpace, claim_id: str) -> EigenClaim:
    """
    One of the radial identities of the model spaces, by id

    r2 and green are Euclidean identities, cos and cosh the sphere and
    hyperbolic ones and sinh2 the complex/quaternionic hyperbolic one; each can
    be posed on any space, where it generally fails.

    Raises:
        ValidationError: Unknown id, or an id that has no meaning on the space
    """
    d = space.d
    if claim_id == "r2":
        return EigenClaim(space, power_function(2), 0.0, 2.0 * d, claim_id)
    if claim_id == "green":
        f = log_function() if d == 2 else power_function(2 - d)
        return EigenClaim(space, f, 0.0, 0.0, claim_id)
    if claim_id == "log":
        return EigenClaim(space, log_function(), 0.0, 0.0, claim_id)
    if claim_id == "cos":
        return EigenClaim(space, cos_function(), -float(d), 0.0, claim_id)
    if claim_id == "cosh":
        return EigenClaim(space, cosh_function(), float(d), 0.0, claim_id)
    if claim_id == "sinh2":
        if space.id is SpaceId.COMPLEX_HYPERBOLIC:
            lam = 4.0 * (space.n + 1)
        elif space.id is SpaceId.QUATERNIONIC_HYPERBOLIC:
            lam = 8.0 * (space.n + 1)
        else:
            raise ValidationError("claim sinh2 is defined on chn and qhn only")
        return EigenClaim(space, hypergeometric_function(space.n), lam, 0.0, claim_id)
    raise ValidationError(f"unknown claim {claim_id!r}; expected one of {CLAIM_IDS}")
