"""
Verification report generation

Handles:
- PDF rendering of identity-suite outcomes
- Layout and formatting of the outcome table
"""

import logging
import math
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Sequence

import reportlab.lib.colors  # type: ignore
import reportlab.lib.pagesizes  # type: ignore
import reportlab.lib.styles  # type: ignore
import reportlab.platypus  # type: ignore

from . import __version__
from .checks import CheckOutcome
from .config import Config

logger = logging.getLogger(__name__)


class VerificationReportGenerator:
    """Generates PDF reports of verification outcomes"""

    def __init__(self, config: Config):
        self.config = config

    def generate_report(
        self, outcomes: Sequence[CheckOutcome], pdf_path: Path
    ) -> Optional[Path]:
        """
        Generate a PDF report for the given outcomes

        Args:
            outcomes: Results of Verifier.run_suite
            pdf_path: Destination file

        Returns:
            Path to generated PDF file, or None if failed
        """
        logger.info("Generating verification report with %d checks", len(outcomes))

        if not self.validate_outcomes(outcomes):
            logger.error("No outcomes to report")
            return None

        try:
            pdf_path = Path(pdf_path)
            pdf_path.parent.mkdir(parents=True, exist_ok=True)
            doc = reportlab.platypus.SimpleDocTemplate(
                str(pdf_path),
                pagesize=reportlab.lib.pagesizes.A4,
                title="radialis verification report",
            )
            doc.build(self._build_pdf_content(outcomes))

            logger.info("Successfully generated verification report: %s", pdf_path)
            return pdf_path

        except (IOError, OSError) as e:
            logger.error("File system error generating report %s: %s", pdf_path, e)
            return None

    def _build_pdf_content(self, outcomes: Sequence[CheckOutcome]) -> list:
        """
        Build the PDF story

        Args:
            outcomes: Results to tabulate

        Returns:
            List of reportlab story elements
        """
        styles = reportlab.lib.styles.getSampleStyleSheet()
        failed = sum(not outcome.passed for outcome in outcomes)
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M UTC")

        story = [
            reportlab.platypus.Paragraph("Radial identity verification", styles["Title"]),
            reportlab.platypus.Paragraph(
                f"radialis {__version__}, {stamp}", styles["Normal"]
            ),
            reportlab.platypus.Spacer(1, 12),
            reportlab.platypus.Paragraph(
                f"{len(outcomes)} checks, {failed} failed", styles["Heading2"]
            ),
            reportlab.platypus.Spacer(1, 12),
            self._outcome_table(outcomes),
        ]
        return story

    def _outcome_table(self, outcomes: Sequence[CheckOutcome]):
        """Table of outcomes with failed rows highlighted"""
        rows: List[List[str]] = [["Check", "Subject", "Value", "Tolerance", "Result"]]
        for outcome in outcomes:
            rows.append(
                [
                    outcome.name,
                    outcome.subject,
                    self._format_number(outcome.value),
                    self._format_number(outcome.tolerance),
                    "pass" if outcome.passed else "FAIL",
                ]
            )

        table = reportlab.platypus.Table(rows, repeatRows=1)
        commands = [
            ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
            ("FONTSIZE", (0, 0), (-1, -1), 8),
            ("LINEBELOW", (0, 0), (-1, 0), 0.5, reportlab.lib.colors.black),
            ("ALIGN", (2, 1), (3, -1), "RIGHT"),
        ]
        for index, outcome in enumerate(outcomes, start=1):
            if not outcome.passed:
                commands.append(
                    ("TEXTCOLOR", (0, index), (-1, index), reportlab.lib.colors.red)
                )
        table.setStyle(reportlab.platypus.TableStyle(commands))
        return table

    @staticmethod
    def _format_number(value: float) -> str:
        """Compact scientific formatting, with NaN shown as a dash"""
        if math.isnan(value):
            return "-"
        return f"{value:.3e}"

    def validate_outcomes(self, outcomes: Sequence[CheckOutcome]) -> bool:
        """Validate that there is something to report"""
        return len(outcomes) > 0
