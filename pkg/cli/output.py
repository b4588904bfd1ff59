"""
cli/output.py
~~~~~~~~~~~~~
Exit codes and output helpers shared by every command.

    0  success
    1  a verification check failed
    2  bad flags, parameters or input documents
    3  numerical failure (a root did not converge)
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator

import click

from config import logger
from store.files import write_atomic
from utils.errors import ConvergenceFailure, DisspecError

EXIT_OK        = 0
EXIT_FAILED    = 1
EXIT_USAGE     = 2
EXIT_NUMERICAL = 3


def emit(text: str, out: str | None) -> None:
    """Write to ``out`` atomically, or to stdout when no path is given."""
    if out:
        write_atomic(out, text)
        logger.info("Wrote %s", out)
    else:
        click.echo(text, nl=False)


@contextmanager
def exit_codes() -> Iterator[None]:
    """Map library errors raised inside a command onto the exit-code contract."""
    ctx = click.get_current_context()
    try:
        yield
    except ConvergenceFailure as exc:
        click.echo(f"Error: no convergence for n={exc.n}, family={exc.family}: {exc}", err=True)
        ctx.exit(EXIT_NUMERICAL)
    except DisspecError as exc:
        click.echo(f"Error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
