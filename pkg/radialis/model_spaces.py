"""
Catalog of the model geometries

Handles:
- The five model spaces (Euclidean, sphere, real/complex/quaternionic hyperbolic)
- Their radial curvature spectra and Einstein constants
- Closed-form densities Theta(r) and volume densities omega_p(r)
- Radial functions used by the eigenfunction identities
"""
# pylint: disable=invalid-name

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import DomainError, NumericalError, ValidationError
from .jets import Elementary, Jet2, JetOp, jet_combine, jet_elementary, sinc_jet

logger = logging.getLogger(__name__)


class SpaceId(str, Enum):
    """Model space families, in catalog order"""

    EUCLIDEAN = "euclidean"
    SPHERE = "sphere"
    HYPERBOLIC = "hyperbolic"
    COMPLEX_HYPERBOLIC = "chn"
    QUATERNIONIC_HYPERBOLIC = "qhn"

    @property
    def order(self) -> int:
        """Position in the catalog, used for deterministic tie-breaks"""
        return list(SpaceId).index(self)


_MIN_PARAMETER = {
    SpaceId.EUCLIDEAN: 2,
    SpaceId.SPHERE: 2,
    SpaceId.HYPERBOLIC: 2,
    SpaceId.COMPLEX_HYPERBOLIC: 1,
    SpaceId.QUATERNIONIC_HYPERBOLIC: 1,
}

_SYMBOLS = {
    SpaceId.EUCLIDEAN: "R",
    SpaceId.SPHERE: "S",
    SpaceId.HYPERBOLIC: "H",
    SpaceId.COMPLEX_HYPERBOLIC: "CH",
    SpaceId.QUATERNIONIC_HYPERBOLIC: "QH",
}


@dataclass(frozen=True)
class CurvatureSpectrum:
    """Sectional curvatures of the radial Jacobi operator with multiplicities"""

    entries: Tuple[Tuple[float, int], ...]

    def __post_init__(self) -> None:
        entries = tuple((float(K), int(mult)) for K, mult in self.entries)
        if not entries:
            raise ValidationError("curvature spectrum must not be empty")
        if any(mult <= 0 for _, mult in entries):
            raise ValidationError("multiplicities must be positive integers")
        curvatures = [K for K, _ in entries]
        if any(not math.isfinite(K) for K in curvatures):
            raise ValidationError("curvatures must be finite")
        if any(b <= a for a, b in zip(curvatures, curvatures[1:])):
            raise ValidationError(
                "spectrum entries must be sorted by curvature without duplicates"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[float, int]]) -> "CurvatureSpectrum":
        """Build a spectrum from unordered (K, mult) pairs, merging equal K"""
        merged: Dict[float, int] = {}
        for K, mult in pairs:
            merged[float(K)] = merged.get(float(K), 0) + int(mult)
        return cls(tuple(sorted(merged.items())))

    @property
    def total_multiplicity(self) -> int:
        """Sum of multiplicities, d - 1"""
        return sum(mult for _, mult in self.entries)

    @property
    def ricci_sum(self) -> float:
        """Sum of K * mult, the radial Ricci curvature"""
        return sum(K * mult for K, mult in self.entries)

    @property
    def distinct_count(self) -> int:
        """Number of distinct curvature values"""
        return len(self.entries)

    @property
    def max_curvature(self) -> float:
        """Largest sectional curvature in the spectrum"""
        return self.entries[-1][0]

    @property
    def first_conjugate_radius(self) -> float:
        """pi / sqrt(K_max) for positive curvature, otherwise infinity"""
        K = self.max_curvature
        return math.pi / math.sqrt(K) if K > 0 else math.inf

    def to_list(self) -> List[List[float]]:
        """JSON-friendly [[K, mult], ...] form"""
        return [[K, mult] for K, mult in self.entries]


@dataclass(frozen=True)
class ModelSpace:
    """A model geometry of the catalog"""

    id: SpaceId
    n: int
    d: int
    spectrum: CurvatureSpectrum
    r_max: float
    einstein_constant: float
    structure: Optional[str] = None

    @property
    def label(self) -> str:
        """Short label such as S3 or CH2"""
        return f"{_SYMBOLS[self.id]}{self.n}"

    @property
    def is_compact(self) -> bool:
        """True for the sphere"""
        return math.isfinite(self.r_max)

    def contains(self, r: float) -> bool:
        """True when 0 < r < r_max"""
        return 0.0 < r < self.r_max

    def to_dict(self) -> Dict[str, Any]:
        """JSON serialisation; an unbounded r_max is written as null"""
        return {
            "id": self.id.value,
            "n": self.n,
            "d": self.d,
            "spectrum": self.spectrum.to_list(),
            "r_max": self.r_max if math.isfinite(self.r_max) else None,
            "einstein_constant": self.einstein_constant,
            "structure": self.structure,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ModelSpace":
        """
        Rebuild a catalog entry from its JSON form

        Raises:
            ValidationError: Unknown id, or fields disagreeing with the catalog
        """
        try:
            space = make_model(SpaceId(data["id"]), int(data["n"]))
        except (KeyError, TypeError, ValueError) as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError(f"malformed catalog entry: {data!r}") from e
        if space.to_dict() != {**space.to_dict(), **data}:
            raise ValidationError(f"catalog entry does not match {space.label}: {data!r}")
        return space


@dataclass(frozen=True)
class RadialFunction:
    """A function of the geodesic distance, evaluated as 2-jets"""

    label: str
    fn: Callable[[float], Jet2] = field(compare=False)
    r_max: float = math.inf

    def __call__(self, r: float) -> Jet2:
        return self.eval(r)

    def eval(self, r: float) -> Jet2:
        """2-jet of the function at r"""
        if not 0.0 < r < self.r_max:
            raise DomainError(f"{self.label} is defined on (0, {self.r_max})", r)
        return self.fn(r)

    def power(self, k: int) -> "RadialFunction":
        """The function raised to an integer power"""
        return RadialFunction(
            f"({self.label})^{k}",
            lambda r: jet_elementary(Elementary.POW, self.fn(r), k=k, radius=r),
            self.r_max,
        )


def make_model(space_id: SpaceId, n: int) -> ModelSpace:
    """
    Construct a catalog entry

    Args:
        space_id: Model space family
        n: Family parameter (the real dimension is n, n, n, 2n or 4n)

    Returns:
        The populated ModelSpace

    Raises:
        ValidationError: n is out of range for the family
    """
    space_id = SpaceId(space_id)
    if isinstance(n, bool) or int(n) != n or n < _MIN_PARAMETER[space_id]:
        raise ValidationError(
            f"{space_id.value} requires integer n >= {_MIN_PARAMETER[space_id]}, got {n!r}"
        )
    n = int(n)

    structure: Optional[str] = None
    r_max = math.inf
    if space_id is SpaceId.EUCLIDEAN:
        d, pairs = n, [(0.0, n - 1)]
    elif space_id is SpaceId.SPHERE:
        d, pairs, r_max = n, [(1.0, n - 1)], math.pi
    elif space_id is SpaceId.HYPERBOLIC:
        d, pairs = n, [(-1.0, n - 1)]
    elif space_id is SpaceId.COMPLEX_HYPERBOLIC:
        d, pairs, structure = 2 * n, [(-4.0, 1), (-1.0, 2 * n - 2)], "kahler"
    else:
        d, pairs, structure = 4 * n, [(-4.0, 3), (-1.0, 4 * n - 4)], "quaternionic-kahler"

    # CH1 has no curvature -1 directions
    spectrum = CurvatureSpectrum(tuple((K, m) for K, m in pairs if m > 0))
    return ModelSpace(
        id=space_id,
        n=n,
        d=d,
        spectrum=spectrum,
        r_max=r_max,
        einstein_constant=spectrum.ricci_sum,
        structure=structure,
    )


def catalog(n: int = 2) -> List[ModelSpace]:
    """The five families at parameter n, in catalog order"""
    return [make_model(space_id, n) for space_id in SpaceId]


def _check_radius(space: ModelSpace, r: float, allow_zero: bool = False) -> None:
    lower_ok = r >= 0.0 if allow_zero else r > 0.0
    if not (lower_ok and r < space.r_max):
        raise DomainError(f"radius outside the domain of {space.label}", r)


def _power(a: Jet2, k: int, r: float) -> Jet2:
    return jet_elementary(Elementary.POW, a, k=k, radius=r)


def _product(a: Jet2, b: Jet2, r: float) -> Jet2:
    return jet_combine(JetOp.MUL, a, b, radius=r)


def _finite(jet: Jet2, what: str, space: ModelSpace, r: float) -> Jet2:
    if not jet.is_finite():
        raise NumericalError(f"{what} of {space.label} is not representable at r={r!r}")
    return jet


def _theta(space: ModelSpace, r: float) -> Jet2:
    x = Jet2.variable(r)
    n = space.n
    if space.id is SpaceId.EUCLIDEAN:
        return _power(x, space.d - 1, r)
    if space.id is SpaceId.SPHERE:
        return _power(jet_elementary(Elementary.SIN, x), n - 1, r)
    sinh = jet_elementary(Elementary.SINH, x, radius=r)
    cosh = jet_elementary(Elementary.COSH, x, radius=r)
    if space.id is SpaceId.HYPERBOLIC:
        return _power(sinh, n - 1, r)
    if space.id is SpaceId.COMPLEX_HYPERBOLIC:
        return _product(_power(sinh, 2 * n - 1, r), cosh, r)
    return _product(_power(sinh, 4 * n - 1, r), _power(cosh, 3, r), r)


def density(space: ModelSpace, r: float) -> Jet2:
    """
    2-jet of Theta(r), the geodesic-sphere area element per unit solid angle

    Raises:
        DomainError: r outside (0, r_max)
        NumericalError: A channel overflows or is NaN
    """
    _check_radius(space, r)
    return _finite(_theta(space, r), "density", space, r)


def omega(space: ModelSpace, r: float) -> Jet2:
    """
    2-jet of the volume density omega_p(r) = Theta(r) / r^(d-1)

    The removable singularity at r = 0 is resolved analytically, so r = 0 is
    allowed and gives omega = 1, omega' = 0.
    """
    _check_radius(space, r, allow_zero=True)
    n = space.n
    if space.id is SpaceId.EUCLIDEAN:
        return Jet2.constant(1.0)
    if space.id is SpaceId.SPHERE:
        return _power(sinc_jet(1.0, r), n - 1, r)
    sinhc = sinc_jet(-1.0, r)
    if space.id is SpaceId.HYPERBOLIC:
        return _finite(_power(sinhc, n - 1, r), "omega", space, r)
    cosh = jet_elementary(Elementary.COSH, Jet2.variable(r), radius=r)
    if space.id is SpaceId.COMPLEX_HYPERBOLIC:
        result = _product(_power(sinhc, 2 * n - 1, r), cosh, r)
    else:
        result = _product(_power(sinhc, 4 * n - 1, r), _power(cosh, 3, r), r)
    return _finite(result, "omega", space, r)


def radial_grid(
    space: ModelSpace,
    r_min: float,
    r_max: float,
    steps: int,
    sphere_cap: float = 1e-3,
) -> np.ndarray:
    """
    Evenly spaced radii inside the admissible interval of a space

    On the sphere r_max is clipped to pi - sphere_cap.

    Raises:
        ValidationError: Empty or inverted interval, or fewer than one step
    """
    if steps < 1:
        raise ValidationError(f"steps must be positive, got {steps}")
    upper = min(r_max, space.r_max - sphere_cap) if space.is_compact else r_max
    if not 0.0 < r_min <= upper:
        raise ValidationError(
            f"invalid radial interval [{r_min}, {upper}] for {space.label}"
        )
    if upper < r_max:
        logger.info("Clipped r_max to %.6f on %s", upper, space.label)
    if steps == 1:
        return np.array([r_min])
    return np.linspace(r_min, upper, steps)


def identity_function() -> RadialFunction:
    """f(r) = r"""
    return RadialFunction("r", Jet2.variable)


def power_function(k: float) -> RadialFunction:
    """f(r) = r^k"""
    return RadialFunction(
        f"r^{k:g}",
        lambda r: jet_elementary(Elementary.POW, Jet2.variable(r), k=k, radius=r),
    )


def log_function() -> RadialFunction:
    """f(r) = log r"""
    return RadialFunction(
        "log r", lambda r: jet_elementary(Elementary.LOG, Jet2.variable(r), radius=r)
    )


def cos_function() -> RadialFunction:
    """f(r) = cos r"""
    return RadialFunction(
        "cos r", lambda r: jet_elementary(Elementary.COS, Jet2.variable(r))
    )


def cosh_function() -> RadialFunction:
    """f(r) = cosh r"""
    return RadialFunction(
        "cosh r", lambda r: jet_elementary(Elementary.COSH, Jet2.variable(r), radius=r)
    )


def hypergeometric_function(n: int) -> RadialFunction:
    """f(r) = 1 + ((n+1)/n) sinh^2 r"""
    if n < 1:
        raise ValidationError(f"hypergeometric function requires n >= 1, got {n}")
    scale = (n + 1) / n

    def _eval(r: float) -> Jet2:
        sinh = jet_elementary(Elementary.SINH, Jet2.variable(r), radius=r)
        return 1.0 + scale * sinh**2

    return RadialFunction(f"1 + ({n + 1}/{n}) sinh^2 r", _eval)
