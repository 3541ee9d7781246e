"""
CSV input and output

Handles:
- Profile files with header `r,value`, `#` comments and blank lines
- Radial tables (r, Theta, omega, H, G') for plotting
"""

import csv
import logging
import math
from typing import IO, Dict, Iterable, List, Sequence, Tuple

from .exceptions import ProfileFormatError
from .greens import green_derivative
from .model_spaces import ModelSpace, density, omega
from .radial_ops import mean_curvature

logger = logging.getLogger(__name__)

PROFILE_HEADER = ["r", "value"]
TABLE_HEADER = ["r", "theta", "omega", "H", "Gprime"]


def read_profile_csv(stream: IO[str]) -> List[Tuple[float, float]]:
    """
    Parse (r, value) samples from a profile CSV stream

    Raises:
        ProfileFormatError: Missing or wrong header, wrong column count, or a
            non-numeric field; the message names the offending line
    """
    samples: List[Tuple[float, float]] = []
    reader = csv.reader(stream)
    header_seen = False
    for row in reader:
        line = reader.line_num
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        fields = [item.strip() for item in row]
        if not header_seen:
            if fields != PROFILE_HEADER:
                raise ProfileFormatError(
                    f"expected header {','.join(PROFILE_HEADER)!r}, got {','.join(fields)!r}",
                    line,
                )
            header_seen = True
            continue
        if len(fields) != 2:
            raise ProfileFormatError(f"expected 2 columns, got {len(fields)}", line)
        try:
            r, value = float(fields[0]), float(fields[1])
        except ValueError as e:
            raise ProfileFormatError(f"non-numeric field in {fields!r}", line) from e
        if not (math.isfinite(r) and math.isfinite(value)):
            raise ProfileFormatError(f"non-finite field in {fields!r}", line)
        samples.append((r, value))

    if not header_seen:
        raise ProfileFormatError("empty profile file", reader.line_num or 1)
    logger.info("Read %d profile samples", len(samples))
    return samples


def write_profile_csv(samples: Iterable[Tuple[float, float]], stream: IO[str]) -> None:
    """Write (r, value) samples with the profile header"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(PROFILE_HEADER)
    for r, value in samples:
        writer.writerow([repr(float(r)), repr(float(value))])


def radial_table(space: ModelSpace, grid: Iterable[float]) -> List[Dict[str, float]]:
    """One row of (r, Theta, omega, H, G') per radius"""
    rows = []
    for r in grid:
        r = float(r)
        rows.append(
            {
                "r": r,
                "theta": density(space, r).value,
                "omega": omega(space, r).value,
                "H": mean_curvature(space, r),
                "Gprime": green_derivative(space, r),
            }
        )
    return rows


def write_table_csv(rows: Sequence[Dict[str, float]], stream: IO[str]) -> None:
    """Write radial table rows with shortest round-trip float formatting"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow([repr(float(row[key])) for key in TABLE_HEADER])
