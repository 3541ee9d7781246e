"""
Verification runs over radial grids

Handles:
- Eigenfunction checks with per-point tables
- Green's function flux and harmonicity sweeps
- Ledger versus Riccati Ricci bookkeeping
- The full identity suite used by `radialis verify` and the PDF report
"""
# pylint: disable=too-many-arguments

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .classify import Quantity, classify_eigenclaim, classify_profile, profile_from_space
from .config import Config
from .exceptions import RadialisError
from .greens import flux, green_harmonicity_residual, green_value
from .jacobi import jacobi_integrate, jacobi_solution, theta_from_spectrum
from .ledger_riccati import ledger_ricci, riccati_ricci, umbilicity_defect
from .model_spaces import ModelSpace, SpaceId, density, make_model, radial_grid
from .radial_ops import eigen_residual, make_claim, radial_laplacian

logger = logging.getLogger(__name__)

# The identity each family is characterised by
NATIVE_CLAIMS = {
    SpaceId.EUCLIDEAN: ("r2", "green"),
    SpaceId.SPHERE: ("cos",),
    SpaceId.HYPERBOLIC: ("cosh",),
    SpaceId.COMPLEX_HYPERBOLIC: ("sinh2",),
    SpaceId.QUATERNIONIC_HYPERBOLIC: ("sinh2",),
}


@dataclass(frozen=True)
class CheckOutcome:
    """One verified identity"""

    name: str
    subject: str
    value: float
    tolerance: float
    passed: bool


@dataclass
class EigenReport:
    """Result of an eigenfunction check"""

    claim: str
    residual: float
    tolerance: float
    passed: bool
    points: List[Tuple[float, float, float, float]] = field(default_factory=list)


@dataclass
class GreenReport:
    """Result of a Green's function sweep"""

    space: str
    flux_error: float
    harmonic_residual: float
    green_value: float
    r_ref: float
    r_end: float
    passed: bool
    points: List[Tuple[float, float, float]] = field(default_factory=list)


@dataclass
class LedgerReport:
    """Ricci curvature by Ledger's formula and by the Riccati equation"""

    space: str
    ledger: float
    riccati_min: float
    riccati_max: float
    gap: float
    einstein_constant: float
    passed: bool


def default_suite_spaces() -> List[ModelSpace]:
    """Space forms for n = 2..4, CH1, CH2 and QH1"""
    spaces = [
        make_model(space_id, n)
        for space_id in (SpaceId.EUCLIDEAN, SpaceId.SPHERE, SpaceId.HYPERBOLIC)
        for n in (2, 3, 4)
    ]
    spaces += [make_model(SpaceId.COMPLEX_HYPERBOLIC, n) for n in (1, 2)]
    spaces.append(make_model(SpaceId.QUATERNIONIC_HYPERBOLIC, 1))
    return spaces


class Verifier:
    """Runs identity checks with the tolerances of a Config"""

    def __init__(self, config: Config):
        self.config = config

    def grid(self, space: ModelSpace, r_min: float, r_max: float, steps: int):
        """Radial grid clipped to the space's domain"""
        return radial_grid(space, r_min, r_max, steps, self.config.SPHERE_CAP)

    def eigencheck(
        self,
        space: ModelSpace,
        claim_id: str,
        r_min: float = 0.1,
        r_max: float = 3.0,
        steps: int = 200,
        tol: Optional[float] = None,
    ) -> EigenReport:
        """
        Check a claim Delta f = lam f + c over a grid

        Args:
            space: Model space the claim is posed on
            claim_id: Claim identifier, see radial_ops.make_claim
            r_min: First radius
            r_max: Last radius, clipped on the sphere
            steps: Number of grid points
            tol: Pass/fail tolerance, defaults to config.TOLERANCE

        Returns:
            EigenReport with the max residual and per-point rows
        """
        tolerance = self.config.TOLERANCE if tol is None else tol
        claim = make_claim(space, claim_id)
        logger.info("Checking %s", claim.describe())

        points = []
        for r in self.grid(space, r_min, r_max, steps):
            laplacian = radial_laplacian(space, claim.f, r)
            rhs = claim.lam * claim.f.eval(r).value + claim.constant
            points.append((float(r), laplacian, rhs, abs(laplacian - rhs)))

        residual = max(point[3] for point in points)
        passed = residual <= tolerance
        logger.info("Max residual %.3e (tolerance %.1e): %s", residual, tolerance, passed)
        return EigenReport(claim.describe(), residual, tolerance, passed, points)

    def green_report(
        self,
        space: ModelSpace,
        r_min: float = 0.1,
        r_max: float = 3.0,
        steps: int = 200,
        r_ref: Optional[float] = None,
    ) -> GreenReport:
        """Flux and harmonicity residuals over a grid, plus G at the last radius"""
        logger.info("Sweeping Green's function of %s", space.label)
        points = []
        grid = self.grid(space, r_min, r_max, steps)
        for r in grid:
            points.append(
                (float(r), abs(flux(space, r) - 1.0), green_harmonicity_residual(space, r))
            )

        anchor = r_min if r_ref is None else r_ref
        end = float(grid[-1])
        value = green_value(
            space, end, anchor, tol=self.config.QUAD_TOL, sphere_cap=self.config.SPHERE_CAP
        )
        flux_error = max(point[1] for point in points)
        harmonic = max(point[2] for point in points)
        passed = flux_error <= self.config.FLUX_TOL and harmonic <= self.config.HARMONIC_TOL
        return GreenReport(
            space.label, flux_error, harmonic, value, anchor, end, passed, points
        )

    def ledger_report(
        self,
        space: ModelSpace,
        r_min: float = 0.1,
        r_max: float = 3.0,
        steps: int = 200,
    ) -> LedgerReport:
        """Both routes to the Einstein constant and their largest gap"""
        logger.info("Computing Ricci curvature of %s", space.label)
        ledger = ledger_ricci(space, self.config.LEDGER_STEP, self.config.LEDGER_LEVELS)
        riccati = [riccati_ricci(space, r) for r in self.grid(space, r_min, r_max, steps)]
        gap = max(abs(ledger - value) for value in riccati)
        passed = gap <= self.config.LEDGER_GAP_TOL and round(ledger) == round(
            space.einstein_constant
        )
        return LedgerReport(
            space.label,
            ledger,
            min(riccati),
            max(riccati),
            gap,
            space.einstein_constant,
            passed,
        )

    def _density_outcome(self, space: ModelSpace) -> CheckOutcome:
        worst = 0.0
        for r in self.grid(space, 0.05, 3.0, 100):
            closed = density(space, r)
            product = theta_from_spectrum(space.spectrum, r)
            for a, b in zip(closed.as_tuple(), product.as_tuple()):
                worst = max(worst, abs(a - b) / max(abs(a), 1e-300))
        return CheckOutcome("density = Jacobi product", space.label, worst, 1e-10, worst <= 1e-10)

    def _umbilicity_outcome(self, space: ModelSpace) -> CheckOutcome:
        defect = umbilicity_defect(space, 1.0)
        if space.spectrum.distinct_count == 1:
            return CheckOutcome("umbilic spheres", space.label, defect, 1e-12, defect <= 1e-12)
        return CheckOutcome("non-umbilic spheres", space.label, defect, 1e-3, defect >= 1e-3)

    def _classification_outcomes(self, space: ModelSpace) -> List[CheckOutcome]:
        outcomes = []
        grid = self.grid(space, 0.1, 3.0, 64)
        for quantity in Quantity:
            result = classify_profile(
                profile_from_space(space, quantity, grid), self.config.CLASSIFY_THRESHOLD
            )
            matched = result.best is not None and result.best.label == space.label
            outcomes.append(
                CheckOutcome(
                    f"classify {quantity.value}",
                    space.label,
                    result.residual,
                    1e-12,
                    matched and result.residual <= 1e-12,
                )
            )
        claim_id = NATIVE_CLAIMS[space.id][0]
        claim = make_claim(space, claim_id)
        result = classify_eigenclaim(
            claim.f,
            claim.lam,
            space.d,
            grid,
            self.config.CLASSIFY_THRESHOLD,
            claim.constant,
            self.config.CRITICAL_THRESHOLD,
        )
        matched = result.best is not None and result.best.label == space.label
        outcomes.append(
            CheckOutcome(
                f"classify claim {claim_id}",
                space.label,
                result.residual,
                self.config.CLASSIFY_THRESHOLD,
                matched,
            )
        )
        return outcomes

    def _jacobi_order_outcomes(self) -> List[CheckOutcome]:
        outcomes = []
        for curvature in (1.0, -1.0, -4.0):
            exact = jacobi_solution(curvature, 1.0).value
            coarse = abs(jacobi_integrate(curvature, 1.0, 0.1) - exact)
            fine = abs(jacobi_integrate(curvature, 1.0, 0.05) - exact)
            ratio = coarse / fine if fine > 0 else math.inf
            outcomes.append(
                CheckOutcome("RK4 error ratio", f"K={curvature:g}", ratio, 15.0, ratio >= 15.0)
            )
        return outcomes

    def run_suite(self, spaces: Optional[Sequence[ModelSpace]] = None) -> List[CheckOutcome]:
        """
        Run every identity check over a set of spaces

        A check that raises is recorded as failed rather than aborting the suite.
        """
        outcomes: List[CheckOutcome] = []
        for space in spaces or default_suite_spaces():
            logger.info("Verifying %s", space.label)
            try:
                outcomes.append(self._density_outcome(space))
                for claim_id in NATIVE_CLAIMS[space.id]:
                    report = self.eigencheck(space, claim_id)
                    outcomes.append(
                        CheckOutcome(
                            f"eigencheck {claim_id}",
                            space.label,
                            report.residual,
                            report.tolerance,
                            report.passed,
                        )
                    )
                green = self.green_report(space)
                outcomes.append(
                    CheckOutcome(
                        "flux = 1",
                        space.label,
                        green.flux_error,
                        self.config.FLUX_TOL,
                        green.flux_error <= self.config.FLUX_TOL,
                    )
                )
                outcomes.append(
                    CheckOutcome(
                        "Green harmonicity",
                        space.label,
                        green.harmonic_residual,
                        self.config.HARMONIC_TOL,
                        green.harmonic_residual <= self.config.HARMONIC_TOL,
                    )
                )
                ledger = self.ledger_report(space)
                outcomes.append(
                    CheckOutcome(
                        "Ledger vs Riccati",
                        space.label,
                        ledger.gap,
                        self.config.LEDGER_GAP_TOL,
                        ledger.passed,
                    )
                )
                outcomes.append(self._umbilicity_outcome(space))
                outcomes.extend(self._classification_outcomes(space))
            except RadialisError as e:
                logger.error("Verification of %s failed: %s", space.label, e)
                outcomes.append(CheckOutcome("error", space.label, math.nan, math.nan, False))
        outcomes.extend(self._jacobi_order_outcomes())

        failed = sum(not outcome.passed for outcome in outcomes)
        logger.info("Suite finished: %d checks, %d failed", len(outcomes), failed)
        return outcomes
