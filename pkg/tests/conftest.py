"""
tests/conftest.py
~~~~~~~~~~~~~~~~~
Shared fixtures. Spectra are computed once per session; they are the
expensive part of most suites.
"""

import pytest
from click.testing import CliRunner

from cli.app import create_cli
from services.spectrum import eigenvalues_ball


@pytest.fixture(scope="session")
def spectrum_gamma2():
    return eigenvalues_ball(2.0, 8)


@pytest.fixture(scope="session")
def spectrum_gamma_half():
    return eigenvalues_ball(0.5, 8)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope="session")
def cli():
    return create_cli()
