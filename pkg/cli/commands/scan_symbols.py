"""
cli/commands/scan_symbols.py
~~~~~~~~~~~~~~~~~~~~~~~~~~~~
`scan-symbols` – tabulate |c|, |d| and Im ρ over a contour × r0 grid.
"""

from __future__ import annotations

import csv
import io

import click

from cli.output import emit, exit_codes
from services.symbols import GRID_DEFAULT, R0_MAX_DEFAULT, ScanGrid, Symbol, grid_minimum, scan_grid

CSV_HEADER = ("r0", "z_re", "z_im", "abs_c", "abs_d", "im_rho")


def scan_csv(scan: ScanGrid) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows([format(v, ".17g") for v in row] for row in scan.rows())
    return buffer.getvalue()


def scan_summary(scan: ScanGrid) -> str:
    parts = []
    for symbol in Symbol:
        low = grid_minimum(scan, symbol)
        parts.append(f"min |{symbol.value}| = {low.value:.6g} at r0 = {low.r0:.6g}, "
                     f"z = {low.z.real:.6g}{low.z.imag:+.6g}i")
    parts.append(f"min Im rho = {float(scan.im_rho.min()):.6g}")
    return "; ".join(parts)


@click.command("scan-symbols")
@click.option("--gamma", type=click.FloatRange(min=0, min_open=True), required=True)
@click.option("--contour", type=click.Choice(["z1", "z2", "z3"]), required=True)
@click.option("--h", type=click.FloatRange(min=0, max=1, min_open=True, max_open=True),
              default=0.01, show_default=True)
@click.option("--delta", type=click.FloatRange(min=0, max=0.5, min_open=True, max_open=True),
              default=0.45, show_default=True)
@click.option("--r0-max", type=click.FloatRange(min=0, min_open=True), default=R0_MAX_DEFAULT, show_default=True)
@click.option("--grid", type=click.IntRange(min=2), default=GRID_DEFAULT, show_default=True)
@click.option("--delta0", type=click.FloatRange(min=0, min_open=True), default=1.0, show_default=True,
              help="Height of Z3.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def scan_symbols_command(gamma: float, contour: str, h: float, delta: float, r0_max: float,
                         grid: int, delta0: float, out: str | None) -> None:
    """Grid scan of the boundary symbols; minima summary on stderr."""
    with exit_codes():
        scan = scan_grid(gamma, contour, h, delta, r0_max, grid, delta0)
        emit(scan_csv(scan), out)
        click.echo(scan_summary(scan), err=True)
