"""
Command-line interface for radialis

Usage:
    radialis list --dim 4                          # Candidates of dimension 4
    radialis eigencheck sphere --n 4 --claim cos   # Delta cos r = -4 cos r on S4
    radialis green hyperbolic --n 3                # Flux and harmonicity of G
    radialis ledger chn --n 2                      # Ricci curvature two ways
    radialis classify --dim 8 --quantity omega samples.csv
    radialis table qhn --n 2 --r-max 3 --steps 300 # CSV plot data
    radialis verify --pdf report.pdf               # Full identity suite

Exit codes: 0 success, 1 tolerance or classification failure, 2 usage or
validation error.
"""
# pylint: disable=too-many-arguments

import dataclasses
import functools
import json
import logging
import math
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import click

from . import __version__
from .checks import CheckOutcome, Verifier
from .classify import ObservedProfile, Quantity, candidates_for_dimension, classify_profile
from .config import Config
from .exceptions import DomainError, NumericalError, ValidationError
from .model_spaces import ModelSpace, SpaceId, catalog, make_model
from .radial_ops import CLAIM_IDS
from .report import VerificationReportGenerator
from .tables import radial_table, read_profile_csv, write_table_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SPACE_CHOICE = click.Choice([space_id.value for space_id in SpaceId])


def handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Map library errors to the exit-code contract"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (ValidationError, DomainError) as e:
            logger.error("%s", e)
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_USAGE)
        except NumericalError as e:
            logger.error("%s", e)
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_FAILURE)

    return wrapper


def radial_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """--r-min, --r-max and --steps"""
    func = click.option(
        "--steps", type=click.IntRange(min=1), default=200, show_default=True,
        help="Number of grid points",
    )(func)
    func = click.option(
        "--r-max", type=float, default=3.0, show_default=True,
        help="Last radius (clipped to pi - cap on the sphere)",
    )(func)
    func = click.option(
        "--r-min", type=float, default=0.1, show_default=True, help="First radius"
    )(func)
    return func


def outcome_to_dict(outcome: CheckOutcome) -> Dict[str, Any]:
    """JSON form of an outcome; NaN placeholders of failed checks become null"""
    return {
        key: None if isinstance(value, float) and not math.isfinite(value) else value
        for key, value in dataclasses.asdict(outcome).items()
    }


def format_space(space: ModelSpace) -> str:
    """One-line human description of a catalog entry"""
    spectrum = ", ".join(f"({K:g}, {mult})" for K, mult in space.spectrum.entries)
    r_max = f"{space.r_max:.6f}" if space.is_compact else "inf"
    line = (
        f"{space.label:<5} d={space.d:<3} spectrum={{{spectrum}}} "
        f"r_max={r_max} einstein={space.einstein_constant:g}"
    )
    if space.structure:
        line += f" [{space.structure}]"
    return line


@click.group()
@click.version_option(version=__version__, prog_name="radialis")
@click.pass_context
def cli(ctx: click.Context) -> None:
    """
    Radial calculus of the harmonic model manifolds.

    Examples:

        radialis list --json

        radialis eigencheck chn --n 3 --claim sinh2

        radialis ledger hyperbolic --n 6
    """
    if ctx.obj is None:
        ctx.obj = Config()
    if not ctx.obj.validate():
        click.echo("Error: invalid configuration, check RADIALIS_* variables", err=True)
        ctx.exit(EXIT_USAGE)


@cli.command("list")
@click.option("--n", "n", type=int, default=2, show_default=True, help="Family parameter")
@click.option("--dim", type=int, default=None, help="List candidates of this dimension")
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@handle_errors
def list_spaces(n: int, dim: Optional[int], output_json: bool) -> None:
    """List catalog entries."""
    spaces = candidates_for_dimension(dim) if dim is not None else catalog(n)
    if output_json:
        click.echo(json.dumps([space.to_dict() for space in spaces], indent=2))
        return
    for space in spaces:
        click.echo(format_space(space))


@cli.command()
@click.argument("space", type=SPACE_CHOICE)
@click.option("--n", "n", type=int, default=2, show_default=True, help="Family parameter")
@click.option("--claim", "claim_id", type=click.Choice(CLAIM_IDS), required=True)
@radial_options
@click.option("--tol", type=float, default=None, help="Tolerance [default: RADIALIS_TOL]")
@click.option("--table", "show_table", is_flag=True, help="Print per-point residuals")
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@click.pass_obj
@handle_errors
def eigencheck(
    config: Config,
    space: str,
    n: int,
    claim_id: str,
    r_min: float,
    r_max: float,
    steps: int,
    tol: Optional[float],
    show_table: bool,
    output_json: bool,
) -> None:
    """
    Check an eigenfunction identity on a model space.

    Examples:

        radialis eigencheck sphere --n 4 --claim cos

        radialis eigencheck euclidean --n 3 --claim green --table
    """
    verifier = Verifier(config)
    report = verifier.eigencheck(
        make_model(SpaceId(space), n), claim_id, r_min, r_max, steps, tol
    )

    if output_json:
        data = {
            "claim": report.claim,
            "residual": report.residual,
            "tolerance": report.tolerance,
            "passed": report.passed,
        }
        if show_table:
            data["points"] = [list(point) for point in report.points]
        click.echo(json.dumps(data, indent=2))
    else:
        if show_table:
            click.echo("r,laplacian,rhs,residual")
            for point in report.points:
                click.echo(",".join(repr(value) for value in point))
        click.echo(f"claim: {report.claim}")
        click.echo(f"max residual: {report.residual:.3e} (tolerance {report.tolerance:.1e})")
        click.echo(f"result: {'pass' if report.passed else 'FAIL'}")

    if not report.passed:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.argument("space", type=SPACE_CHOICE)
@click.option("--n", "n", type=int, default=2, show_default=True, help="Family parameter")
@radial_options
@click.option("--r-ref", type=float, default=None, help="Anchor radius [default: r-min]")
@click.option("--table", "show_table", is_flag=True, help="Print per-point residuals")
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@click.pass_obj
@handle_errors
def green(
    config: Config,
    space: str,
    n: int,
    r_min: float,
    r_max: float,
    steps: int,
    r_ref: Optional[float],
    show_table: bool,
    output_json: bool,
) -> None:
    """Check flux normalisation and harmonicity of the radial Green's function."""
    report = Verifier(config).green_report(
        make_model(SpaceId(space), n), r_min, r_max, steps, r_ref
    )

    if output_json:
        data = {
            "space": report.space,
            "flux_error": report.flux_error,
            "harmonic_residual": report.harmonic_residual,
            "green_value": report.green_value,
            "r_ref": report.r_ref,
            "r_end": report.r_end,
            "passed": report.passed,
        }
        click.echo(json.dumps(data, indent=2))
    else:
        if show_table:
            click.echo("r,flux_error,harmonic_residual")
            for point in report.points:
                click.echo(",".join(repr(value) for value in point))
        click.echo(f"space: {report.space}")
        click.echo(f"max |flux - 1|: {report.flux_error:.3e}")
        click.echo(f"max |G'' + H G'|: {report.harmonic_residual:.3e}")
        click.echo(f"G({report.r_end:g}) - G({report.r_ref:g}) anchored: {report.green_value:.12g}")
        click.echo(f"result: {'pass' if report.passed else 'FAIL'}")

    if not report.passed:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.argument("space", type=SPACE_CHOICE)
@click.option("--n", "n", type=int, default=2, show_default=True, help="Family parameter")
@radial_options
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@click.pass_obj
@handle_errors
def ledger(
    config: Config,
    space: str,
    n: int,
    r_min: float,
    r_max: float,
    steps: int,
    output_json: bool,
) -> None:
    """
    Compare Ledger's formula with the Riccati trace identity.

    Examples:

        radialis ledger hyperbolic --n 6
    """
    report = Verifier(config).ledger_report(make_model(SpaceId(space), n), r_min, r_max, steps)

    if output_json:
        click.echo(json.dumps(dataclasses.asdict(report), indent=2))
    else:
        click.echo(f"space: {report.space}")
        click.echo(f"ledger:  {report.ledger:.9f}")
        click.echo(f"riccati: {report.riccati_min:.9f} .. {report.riccati_max:.9f}")
        click.echo(f"gap: {report.gap:.3e}")
        click.echo(f"einstein constant: {report.einstein_constant:g}")
        click.echo(f"result: {'pass' if report.passed else 'FAIL'}")

    if not report.passed:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.argument("profile", type=click.File("r"))
@click.option("--dim", type=click.IntRange(min=2), required=True, help="Real dimension")
@click.option(
    "--quantity",
    type=click.Choice([quantity.value for quantity in Quantity]),
    required=True,
    help="Radial quantity in the file",
)
@click.option("--threshold", type=float, default=None, help="Match threshold")
@click.pass_obj
@handle_errors
def classify(
    config: Config, profile, dim: int, quantity: str, threshold: Optional[float]
) -> None:
    """
    Classify a sampled radial profile (CSV with header r,value).

    Examples:

        radialis classify --dim 8 --quantity omega samples.csv
    """
    samples = read_profile_csv(profile)
    obs = ObservedProfile.from_samples(Quantity(quantity), samples, dim)
    result = classify_profile(
        obs, config.CLASSIFY_THRESHOLD if threshold is None else threshold
    )
    click.echo(json.dumps(result.to_dict(), indent=2, allow_nan=False))
    if result.best is None:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.argument("space", type=SPACE_CHOICE)
@click.option("--n", "n", type=int, default=2, show_default=True, help="Family parameter")
@radial_options
@click.option(
    "--output", "-o", type=click.File("w"), default="-", help="Output file [default: stdout]"
)
@click.pass_obj
@handle_errors
def table(
    config: Config, space: str, n: int, r_min: float, r_max: float, steps: int, output
) -> None:
    """
    Emit r, Theta, omega, H and G' as CSV for plotting.

    Examples:

        radialis table qhn --n 2 --r-max 3 --steps 300
    """
    model = make_model(SpaceId(space), n)
    grid = Verifier(config).grid(model, r_min, r_max, steps)
    write_table_csv(radial_table(model, grid), output)


@cli.command()
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), default=None,
              help="Also write a PDF report")
@click.pass_obj
@handle_errors
def verify(config: Config, output_json: bool, pdf_path: Optional[str]) -> None:
    """Run the full identity suite over the default set of spaces."""
    outcomes = Verifier(config).run_suite()

    if output_json:
        click.echo(json.dumps([outcome_to_dict(outcome) for outcome in outcomes], indent=2))
    else:
        for outcome in outcomes:
            status = "pass" if outcome.passed else "FAIL"
            click.echo(
                f"{status:<4} {outcome.name:<26} {outcome.subject:<6} "
                f"{outcome.value:.3e} (tol {outcome.tolerance:.1e})"
            )

    if pdf_path and VerificationReportGenerator(config).generate_report(
        outcomes, Path(pdf_path)
    ) is None:
        click.echo(f"Error: could not write {pdf_path}", err=True)
        sys.exit(EXIT_FAILURE)

    if not all(outcome.passed for outcome in outcomes):
        sys.exit(EXIT_FAILURE)
