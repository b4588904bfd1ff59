"""
cli/commands/spectrum.py
~~~~~~~~~~~~~~~~~~~~~~~~
`spectrum` – compute the ball spectrum and print or save it as JSON/CSV.
"""

from __future__ import annotations

import click

from cli.output import emit, exit_codes
from config import PRECISION_BITS, WORKERS, logger
from services.spectrum import SpectrumOptions, eigenvalues_ball
from store.documents import SpectrumDocument
from store.files import save_document


@click.command("spectrum")
@click.option("--gamma", type=click.FloatRange(min=0, min_open=True), required=True,
              help="Boundary impedance γ > 0.")
@click.option("--n-max", type=click.IntRange(min=1), default=40, show_default=True,
              help="Highest spherical mode.")
@click.option("--precision", type=click.IntRange(min=53), default=PRECISION_BITS, show_default=True,
              help="Working precision in bits.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output file (default: stdout).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=WORKERS, show_default=True,
              help="Processes used for the (n, family) fan-out.")
def spectrum_command(gamma: float, n_max: int, precision: int, out: str | None, fmt: str, workers: int) -> None:
    """Eigenvalues of the dissipative Maxwell generator on the unit ball."""
    with exit_codes():
        opts = SpectrumOptions(precision=precision, workers=workers)
        eigs = eigenvalues_ball(gamma, n_max, opts)
        doc = SpectrumDocument.from_spectrum(gamma, n_max, precision, eigs)
        if out:
            save_document(out, doc, fmt)
            logger.info("Wrote %s", out)
        else:
            emit(doc.render(fmt), None)
