from __future__ import annotations

import typer

from rieszsup.errors import RieszError
from rieszsup.workflows import RunConfig, run

__doc__ = """
Shared plumbing of the commands: run a configuration, print the report and
turn the status or a domain error into the process exit code.
"""


def fail(message: str):
    typer.secho(f"Error: {message}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code=1)


def execute(config: RunConfig):
    """Run `config`, echo its report to stdout and exit with its status."""
    try:
        status, report = run(config)
    except RieszError as exc:
        fail(str(exc))
    typer.echo(report)
    if status != 0:
        raise typer.Exit(code=status)
