"""Entry point for `python -m fraccauchy`."""

from fraccauchy.cli import main

main()
