from __future__ import annotations

from typing import Annotated

import typer

from rieszsup.atoms import as_ext
from rieszsup.errors import RieszError
from rieszsup.workflows import OutputFormat, RunConfig, Subcommand
from rieszsup.workflows.run import repeat_probabilities

from .common import execute, fail

__doc__ = """
CLI command for the truncated product-space Borel-Cantelli experiment.
"""


def borel_cantelli(
    p: Annotated[
        list[str],
        typer.Option(
            "--p",
            "-p",
            help="Probability p_n as 'a/b'. Repeat for p_1..p_N, or give one "
            "value together with --depth.",
        ),
    ],
    depth: Annotated[
        int | None,
        typer.Option("--depth", "-n", help="Number of events N (at most 14)."),
    ] = None,
    output_format: Annotated[
        OutputFormat,
        typer.Option("--format", "-f", help="Text table or structured JSON."),
    ] = OutputFormat.TEXT,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Enable detailed logging.")
    ] = False,
):
    """
    Compares the union value of N pairwise independent events with the
    certificate S*_{1,N} K_{1,N}^2 at every depth up to N.
    """
    from rieszsup.cli.main import setup_logging

    setup_logging(verbose)
    try:
        probabilities = repeat_probabilities([as_ext(v) for v in p], depth)
    except RieszError as exc:
        fail(str(exc))
    execute(
        RunConfig(
            Subcommand.BOREL_CANTELLI,
            output_format=output_format,
            probabilities=probabilities,
        )
    )
