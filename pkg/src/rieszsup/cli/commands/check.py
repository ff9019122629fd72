from __future__ import annotations

from typing import Annotated

import typer

from rieszsup.config import DEFAULT_SEED, DEFAULT_TRIALS, THREADS
from rieszsup.errors import RieszError
from rieszsup.workflows import ALL_LEMMA_SUITES, OutputFormat, RunConfig, Subcommand

from .common import execute, fail

__doc__ = """
CLI command for the seeded lemma-check harness.
"""


def check(
    lemma: Annotated[
        list[str] | None,
        typer.Option(
            "--lemma",
            "-l",
            help="Suite to run (e.g. 'YY2-H'). Can be used multiple times; "
            "all suites run when omitted.",
        ),
    ] = None,
    trials: Annotated[
        int, typer.Option("--trials", "-t", help="Random instances per suite.")
    ] = DEFAULT_TRIALS,
    seed: Annotated[
        int, typer.Option("--seed", "-s", help="Unsigned 64-bit master seed.")
    ] = DEFAULT_SEED,
    output_format: Annotated[
        OutputFormat,
        typer.Option("--format", "-f", help="Text summary or structured JSON."),
    ] = OutputFormat.TEXT,
    list_suites: Annotated[
        bool, typer.Option("--list", help="List the registered suites and exit.")
    ] = False,
    save: Annotated[
        bool,
        typer.Option("--save", help="Also write the JSON report to the artifacts."),
    ] = False,
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Enable detailed logging.")
    ] = False,
):
    """
    Runs lemma suites over seeded random instances and prints pass/fail counts,
    with the first counterexample of a failing suite. Exits with status 1 if
    any trial fails.
    """
    from rieszsup.cli.main import setup_logging

    setup_logging(verbose)

    if list_suites:
        for name, suite in ALL_LEMMA_SUITES.items():
            typer.echo(f"{name:<9} {suite.statement}")
        return

    try:
        config = RunConfig(
            Subcommand.CHECK,
            seed=seed,
            trials=trials,
            lemmas=tuple(lemma or ()),
            output_format=output_format,
            threads=THREADS,
            save=save,
        )
    except RieszError as exc:
        fail(str(exc))
    execute(config)
