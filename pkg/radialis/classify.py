"""
Classification of radial profiles against the model spaces

Handles:
- Candidate model spaces for a real dimension
- Predictions of mean curvature, density and volume density per candidate
- Sup-norm residuals and best-match selection
- Eigenfunction claims converted to mean-curvature profiles

A match of profiles is what is computed here. It becomes an isometry only
under the hypotheses of the characterisation theorems: the manifold is a
complete, simply connected harmonic manifold, additionally Kahler for the
complex hyperbolic conclusion and quaternionic Kahler for the quaternionic one.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import NumericalError, ValidationError
from .model_spaces import ModelSpace, RadialFunction, SpaceId, density, make_model, omega
from .radial_ops import DEFAULT_CRITICAL_THRESHOLD, mean_curvature, recover_mean_curvature

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 1e-6
MIN_SAMPLES = 8


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


class Quantity(str, Enum):
    """Radial quantity carried by an observed profile"""

    MEAN_CURVATURE = "mean_curvature"
    DENSITY = "density"
    OMEGA = "omega"

    @property
    def logarithmic(self) -> bool:
        """Densities are compared on the logarithmic scale"""
        return self is not Quantity.MEAN_CURVATURE


@dataclass(frozen=True)
class ObservedProfile:
    """Samples (r, value) of one radial quantity on a manifold of dimension d"""

    quantity: Quantity
    radii: np.ndarray
    values: np.ndarray
    dimension: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "quantity", Quantity(self.quantity))
        radii = np.asarray(self.radii, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if radii.ndim != 1 or radii.shape != values.shape:
            raise ValidationError("radii and values must be 1-D sequences of equal length")
        if radii.size < MIN_SAMPLES:
            raise ValidationError(
                f"profile needs at least {MIN_SAMPLES} samples, got {radii.size}"
            )
        if self.dimension < 2:
            raise ValidationError(f"dimension must be at least 2, got {self.dimension}")
        if not (np.all(np.isfinite(radii)) and np.all(np.isfinite(values))):
            raise ValidationError("profile samples must be finite")
        if np.any(radii <= 0.0):
            raise ValidationError("profile radii must be positive")
        if np.any(np.diff(radii) <= 0.0):
            raise ValidationError("profile radii must be strictly increasing")
        if self.quantity.logarithmic and np.any(values <= 0.0):
            raise ValidationError(f"{self.quantity.value} samples must be positive")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_samples(
        cls, quantity: Quantity, samples: Sequence[Tuple[float, float]], dimension: int
    ) -> "ObservedProfile":
        """Build a profile from (r, value) pairs"""
        pairs = np.asarray(samples, dtype=float).reshape(-1, 2)
        return cls(Quantity(quantity), pairs[:, 0], pairs[:, 1], dimension)


@dataclass(frozen=True)
class ClassificationResult:
    """Best-matching model space with the residual of every candidate"""

    best: Optional[ModelSpace]
    residual: float
    table: Dict[str, float] = field(default_factory=dict)
    threshold: float = DEFAULT_THRESHOLD

    def to_dict(self) -> Dict[str, Any]:
        """JSON serialisation; infinite or NaN residuals are written as null"""
        best = None
        if self.best is not None:
            best = {"id": self.best.id.value, "n": self.best.n, "label": self.best.label}
        return {
            "best": best,
            "residual": _finite_or_none(self.residual),
            "threshold": self.threshold,
            "table": {label: _finite_or_none(value) for label, value in self.table.items()},
        }


def candidates_for_dimension(d: int) -> List[ModelSpace]:
    """
    Every catalog space of real dimension d, in catalog order

    Raises:
        ValidationError: d < 2
    """
    if d < 2:
        raise ValidationError(f"dimension must be at least 2, got {d}")
    candidates = [
        make_model(SpaceId.EUCLIDEAN, d),
        make_model(SpaceId.SPHERE, d),
        make_model(SpaceId.HYPERBOLIC, d),
    ]
    if d % 2 == 0:
        candidates.append(make_model(SpaceId.COMPLEX_HYPERBOLIC, d // 2))
    if d % 4 == 0:
        candidates.append(make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, d // 4))
    return candidates


def predict(space: ModelSpace, quantity: Quantity, r: float) -> float:
    """The value a model space predicts for a radial quantity at r"""
    quantity = Quantity(quantity)
    if quantity is Quantity.MEAN_CURVATURE:
        return mean_curvature(space, r)
    if quantity is Quantity.DENSITY:
        return density(space, r).value
    return omega(space, r).value


def profile_from_space(
    space: ModelSpace, quantity: Quantity, grid: Iterable[float]
) -> ObservedProfile:
    """The exact profile of a catalog space sampled on a grid"""
    radii = np.asarray(list(grid), dtype=float)
    values = np.array([predict(space, quantity, r) for r in radii])
    return ObservedProfile(Quantity(quantity), radii, values, space.d)


def _residual(space: ModelSpace, obs: ObservedProfile) -> float:
    try:
        predicted = np.array([predict(space, obs.quantity, r) for r in obs.radii])
    except NumericalError as e:
        logger.debug("No %s prediction from %s: %s", obs.quantity.value, space.label, e)
        return math.inf
    if not np.all(np.isfinite(predicted)):
        return math.inf
    if obs.quantity.logarithmic:
        if np.any(predicted <= 0.0):
            return math.inf
        difference = np.log(obs.values) - np.log(predicted)
    else:
        difference = obs.values - predicted
    return float(np.max(np.abs(difference)))


def classify_profile(
    obs: ObservedProfile, threshold: float = DEFAULT_THRESHOLD
) -> ClassificationResult:
    """
    Match an observed profile against every candidate of its dimension

    Sphere candidates are dropped when any sample lies at or beyond pi. Ties
    are broken by catalog order.

    Raises:
        ValidationError: Non-positive threshold
    """
    if not threshold > 0.0:
        raise ValidationError(f"threshold must be positive, got {threshold!r}")

    candidates = candidates_for_dimension(obs.dimension)
    if obs.radii[-1] >= math.pi:
        candidates = [space for space in candidates if space.id is not SpaceId.SPHERE]

    table: Dict[str, float] = {}
    winner: Optional[ModelSpace] = None
    smallest = math.inf
    for space in candidates:
        residual = _residual(space, obs)
        table[space.label] = residual
        logger.debug("%s residual against %s: %.3e", obs.quantity.value, space.label, residual)
        if residual < smallest:
            winner, smallest = space, residual

    best = winner if smallest <= threshold else None
    logger.info(
        "Classified %s profile (d=%d): %s, residual %.3e",
        obs.quantity.value,
        obs.dimension,
        best.label if best else "none",
        smallest,
    )
    return ClassificationResult(best, smallest, table, threshold)


def classify_eigenclaim(
    f: RadialFunction,
    lam: float,
    d: int,
    grid: Iterable[float],
    threshold: float = DEFAULT_THRESHOLD,
    constant: float = 0.0,
    critical_threshold: float = DEFAULT_CRITICAL_THRESHOLD,
) -> ClassificationResult:
    """
    Classify the manifold forced by the claim Delta f = lam f + constant

    Raises:
        CriticalPointError: |f'| below critical_threshold at a grid point
    """
    radii = np.asarray(list(grid), dtype=float)
    implied = np.array(
        [recover_mean_curvature(f, lam, r, constant, critical_threshold) for r in radii]
    )
    obs = ObservedProfile(Quantity.MEAN_CURVATURE, radii, implied, d)
    return classify_profile(obs, threshold)
