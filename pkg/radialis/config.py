"""
Configuration management for radialis

Handles environment variables and settings for:
- Numerical tolerances of the verification commands
- Quadrature and Richardson extrapolation parameters
- Logging
"""
# pylint: disable=too-many-instance-attributes, invalid-name

import math
import os
from typing import Optional

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Config:  # pylint: disable=too-few-public-methods
    """Configuration class for radialis"""

    def __init__(self) -> None:
        """Initialize configuration with environment variables"""
        # Pass/fail limits
        self.TOLERANCE: float = float(os.getenv("RADIALIS_TOL", "1e-9"))
        self.CLASSIFY_THRESHOLD: float = float(
            os.getenv("RADIALIS_CLASSIFY_THRESHOLD", "1e-6")
        )
        self.FLUX_TOL: float = float(os.getenv("RADIALIS_FLUX_TOL", "1e-12"))
        self.HARMONIC_TOL: float = float(os.getenv("RADIALIS_HARMONIC_TOL", "1e-10"))
        self.LEDGER_GAP_TOL: float = float(
            os.getenv("RADIALIS_LEDGER_GAP_TOL", "1e-5")
        )

        # Numerical parameters
        self.CRITICAL_THRESHOLD: float = float(
            os.getenv("RADIALIS_CRITICAL_THRESHOLD", "1e-12")
        )
        self.QUAD_TOL: float = float(os.getenv("RADIALIS_QUAD_TOL", "1e-10"))
        self.SPHERE_CAP: float = float(os.getenv("RADIALIS_SPHERE_CAP", "1e-3"))
        self.LEDGER_STEP: float = float(os.getenv("RADIALIS_LEDGER_STEP", "1e-2"))
        self.LEDGER_LEVELS: int = int(os.getenv("RADIALIS_LEDGER_LEVELS", "2"))

        # Logging
        self.LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING").upper()
        self.LOG_FILE: Optional[str] = os.getenv("RADIALIS_LOG_FILE")

    def validate(self) -> bool:
        """Validate that every tolerance and numerical parameter is usable"""
        positive_fields = [
            self.TOLERANCE,
            self.CLASSIFY_THRESHOLD,
            self.FLUX_TOL,
            self.HARMONIC_TOL,
            self.LEDGER_GAP_TOL,
            self.CRITICAL_THRESHOLD,
            self.QUAD_TOL,
            self.LEDGER_STEP,
        ]
        if not all(math.isfinite(field) and field > 0 for field in positive_fields):
            return False
        if not 0.0 < self.SPHERE_CAP < 1.0:
            return False
        if self.LOG_LEVEL not in LOG_LEVELS:
            return False
        return self.LEDGER_LEVELS >= 1
