from __future__ import annotations

import logging

import typer

from .commands.borel_cantelli import borel_cantelli
from .commands.bound import bound
from .commands.check import check
from .commands.elements import decompose, star

__doc__ = """
This module provides the main entry point for the rieszsup CLI.

It defines the main Typer application and registers every command from the
`commands` directory.
"""

app = typer.Typer(
    name="rieszsup",
    help="Exact computations in the sup-completion of an atomic Riesz space.",
    add_completion=False,
)

app.command()(decompose)
app.command()(star)
app.command()(bound)
app.command(name="borel-cantelli")(borel_cantelli)
app.command()(check)


def setup_logging(verbose: bool):
    """
    Configures the root logger based on the verbosity flag.
    """
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
