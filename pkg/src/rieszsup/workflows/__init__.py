from __future__ import annotations

__doc__ = """
The `workflows` package provides the high-level pieces behind the command
line: the seeded instance builders, the lemma suites, the check harness that
runs them and the dispatcher of a single invocation.
"""

from .check_workflow import CheckWorkflow, suite_stream
from .generators import InstanceBuilder, trial_rng
from .run import OutputFormat, RunConfig, Subcommand, render_check, run
from .suites import ALL_LEMMA_SUITES, LemmaSuite, TrialResult

__all__ = [
    "ALL_LEMMA_SUITES",
    "CheckWorkflow",
    "InstanceBuilder",
    "LemmaSuite",
    "OutputFormat",
    "RunConfig",
    "Subcommand",
    "TrialResult",
    "render_check",
    "run",
    "suite_stream",
    "trial_rng",
]
