"""
cli/commands/verify.py
~~~~~~~~~~~~~~~~~~~~~~
`verify` – run the appendix, regions and symbols suites.

stdout gets one `STATUS name margin` line per check; `--report` saves the
full JSON report. Exit code 1 when any check fails.
"""

from __future__ import annotations

import click

from cli.output import EXIT_FAILED, exit_codes
from config import PRECISION_BITS, PROBE_SEED, WORKERS
from services.appendix import verify_appendix
from services.checks import Report
from services.regions import delta_for_eps, verify_regions
from services.spectrum import SpectrumOptions, eigenvalues_ball
from services.symbols import GRID_DEFAULT, R0_MAX_DEFAULT, verify_symbols
from store.files import save_reports

SUITES = ("appendix", "regions", "symbols")


@click.command("verify")
@click.option("--gamma", type=click.FloatRange(min=0, min_open=True), required=True)
@click.option("--n-max", type=click.IntRange(min=1), default=40, show_default=True)
@click.option("--suite", type=click.Choice([*SUITES, "all"]), default="all", show_default=True)
@click.option("--eps", type=click.FloatRange(min=0, max=0.5, min_open=True, max_open=True),
              default=0.05, show_default=True, help="Λ_ε exponent for region fitting.")
@click.option("--N", "order", type=click.IntRange(min=1), default=4, show_default=True,
              help="R_N order for region fitting.")
@click.option("--h", type=click.FloatRange(min=0, max=1, min_open=True, max_open=True),
              default=0.01, show_default=True, help="Semiclassical parameter for the symbols suite.")
@click.option("--delta", type=click.FloatRange(min=0, max=0.5, min_open=True, max_open=True),
              default=None, help="Contour exponent (default: 1/2 - eps).")
@click.option("--grid", type=click.IntRange(min=2), default=GRID_DEFAULT, show_default=True)
@click.option("--r0-max", type=click.FloatRange(min=0, min_open=True), default=R0_MAX_DEFAULT, show_default=True)
@click.option("--precision", type=click.IntRange(min=53), default=PRECISION_BITS, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=WORKERS, show_default=True)
@click.option("--seed", type=int, default=PROBE_SEED, show_default=True, help="Seed for random probes.")
@click.option("--report", "report_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report here.")
def verify_command(gamma: float, n_max: int, suite: str, eps: float, order: int, h: float,
                   delta: float | None, grid: int, r0_max: float, precision: int, workers: int,
                   seed: int, report_path: str | None) -> None:
    """Check the computed spectrum and symbols against their closed forms and bounds."""
    selected = SUITES if suite == "all" else (suite,)
    reports: list[Report] = []
    with exit_codes():
        opts = SpectrumOptions(precision=precision, workers=workers)
        eigs = None
        if "appendix" in selected or "regions" in selected:
            eigs = eigenvalues_ball(gamma, n_max, opts)
        if "appendix" in selected:
            reports.append(verify_appendix(gamma, n_max, opts, seed=seed, eigs=eigs))
        if "regions" in selected:
            reports.append(verify_regions(eigs, eps, order))
        if "symbols" in selected:
            reports.append(verify_symbols(gamma, h, delta if delta is not None else delta_for_eps(eps),
                                          r0_max=r0_max, grid=grid))

    for report in reports:
        for check in report.checks:
            click.echo(check.line())
    if report_path:
        save_reports(report_path, reports)

    if not all(r.passed for r in reports):
        click.get_current_context().exit(EXIT_FAILED)
