"""
cli/app.py
~~~~~~~~~~
Click application factory. Each command lives in cli/commands and is
registered here in a fixed order.
"""

from __future__ import annotations

import click

from cli.commands import plot_command, scan_symbols_command, spectrum_command, verify_command
from config import TOOL_VERSION


def create_cli() -> click.Group:
    @click.group(name="disspec")
    @click.version_option(version=TOOL_VERSION, prog_name="disspec")
    def cli() -> None:
        """Eigenvalues of the dissipative Maxwell problem on the unit ball.

        Examples:

            python main.py spectrum --gamma 2 --n-max 40 --out spectrum.json

            python main.py verify --gamma 2 --suite appendix

            python main.py scan-symbols --gamma 0.5 --contour z2 --r0-max 5

            python main.py plot --input spectrum.json --out regions.svg
        """

    cli.add_command(spectrum_command)
    cli.add_command(verify_command)
    cli.add_command(scan_symbols_command)
    cli.add_command(plot_command)
    return cli
