from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from rieszsup.workflows import OutputFormat, RunConfig, Subcommand

from .common import execute

__doc__ = """
CLI commands that act on a list of elements: the finite/infinite
decomposition and the star map.
"""

InputArg = Annotated[
    Path,
    typer.Argument(
        help="YAML or JSON file: one element, a list of elements or "
        "{elements: [...]}. Coordinates are integers, 'p/q' strings or 'inf'.",
    ),
]
FormatOpt = Annotated[
    OutputFormat,
    typer.Option("--format", "-f", help="Text table or structured JSON."),
]
VerboseOpt = Annotated[
    bool, typer.Option("--verbose", "-v", help="Enable detailed logging.")
]


def decompose(
    input_path: InputArg,
    output_format: FormatOpt = OutputFormat.TEXT,
    verbose: VerboseOpt = False,
):
    """
    Splits every element into its finite part and its infinite part.
    """
    from rieszsup.cli.main import setup_logging

    setup_logging(verbose)
    execute(RunConfig(Subcommand.DECOMPOSE, input_path, output_format=output_format))


def star(
    input_path: InputArg,
    output_format: FormatOpt = OutputFormat.TEXT,
    verbose: VerboseOpt = False,
):
    """
    Prints the partial inverse x* of every element.
    """
    from rieszsup.cli.main import setup_logging

    setup_logging(verbose)
    execute(RunConfig(Subcommand.STAR, input_path, output_format=output_format))
