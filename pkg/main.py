"""
main.py
~~~~~~~
Entry point for the DISSPEC command line.

Run with:
    python main.py --help
    python main.py spectrum --gamma 2 --n-max 40
"""

from cli.app import create_cli

cli = create_cli()

if __name__ == "__main__":
    cli()
