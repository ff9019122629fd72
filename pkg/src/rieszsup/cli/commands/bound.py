from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer

from rieszsup.config import FLOAT_DIAGNOSTICS_THRESHOLD
from rieszsup.workflows import OutputFormat, RunConfig, Subcommand

from .common import execute

__doc__ = """
CLI command for the lower bound on the conditional probability of a limsup
event.
"""


def bound(
    input_path: Annotated[
        Path,
        typer.Argument(
            help="Bound document with space, partition, weights_seq, events_seq "
            "and checkpoints."
        ),
    ],
    corollary: Annotated[
        bool,
        typer.Option(
            "--corollary",
            help="Use the weights v_n = (T q_n)* and print the displayed form.",
        ),
    ] = False,
    output_format: Annotated[
        OutputFormat,
        typer.Option("--format", "-f", help="Text table or structured JSON."),
    ] = OutputFormat.TEXT,
    float_threshold: Annotated[
        int,
        typer.Option(
            "--float-threshold",
            help="Attach float64 diagnostics to checkpoints beyond this index.",
        ),
    ] = FLOAT_DIAGNOSTICS_THRESHOLD,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Enable detailed logging.")
    ] = False,
):
    """
    Evaluates the bound exactly at the document's checkpoints and prints the
    certificates. Exits with status 1 unless the verdict is true.
    """
    from rieszsup.cli.main import setup_logging

    setup_logging(verbose)
    execute(
        RunConfig(
            Subcommand.BOUND,
            input_path,
            output_format=output_format,
            corollary=corollary,
            float_threshold=float_threshold,
        )
    )
