"""
cli/commands/plot.py
~~~~~~~~~~~~~~~~~~~~
`plot` – draw a saved spectrum over the fitted Λ_ε ∪ R_N picture.
"""

from __future__ import annotations

import click

from cli.output import emit, exit_codes
from render.figure import spectrum_figure
from services.regions import fitted_regions
from store.files import load_document

EMPTY_CONSTANT = 1.0  # used when there is nothing to fit


@click.command("plot")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Spectrum JSON written by `spectrum`.")
@click.option("--eps", type=click.FloatRange(min=0, max=0.5, min_open=True, max_open=True),
              default=0.05, show_default=True)
@click.option("--N", "order", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--c-eps", type=click.FloatRange(min=0), default=None, help="Override the fitted C_ε.")
@click.option("--c-n", type=click.FloatRange(min=0), default=None, help="Override the fitted C_N.")
def plot_command(input_path: str, eps: float, order: int, out: str,
                 c_eps: float | None, c_n: float | None) -> None:
    """SVG of the eigenvalue regions with the computed eigenvalues overlaid."""
    with exit_codes():
        doc = load_document(input_path)
        values = [r.value for r in doc.eigenvalues]
        if c_eps is None or c_n is None:
            if values:
                lam_eps, rn = fitted_regions(values, eps, order)
                fit = (lam_eps.c_eps, rn.c_n)
            else:
                fit = (EMPTY_CONSTANT, EMPTY_CONSTANT)
            c_eps = fit[0] if c_eps is None else c_eps
            c_n = fit[1] if c_n is None else c_n
        title = f"gamma = {doc.gamma:g}, n_max = {doc.n_max}, {len(values)} eigenvalues"
        emit(spectrum_figure(values, eps, order, c_eps, c_n, title=title), out)
