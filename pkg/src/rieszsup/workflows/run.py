from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path

from rieszsup.atoms import Element
from rieszsup.bounds import borel_cantelli, corollary_m10, theorem_m7
from rieszsup.calculus import decompose, star
from rieszsup.config import DEFAULT_SEED, DEFAULT_TRIALS, THREADS
from rieszsup.data import (
    borel_cantelli_to_dict,
    bound_report_to_dict,
    format_element,
    load_bound_document,
    load_elements,
    render_borel_cantelli,
    render_bound_report,
    render_elements,
    to_json,
)
from rieszsup.errors import PreconditionViolated

from .check_workflow import CheckWorkflow

__doc__ = """
Dispatch of one command-line invocation: a `RunConfig` goes in, an exit
status and the report text come out. Nothing here prints or exits, so every
subcommand can be driven from tests without a terminal.
"""

logger = logging.getLogger(__name__)

MAX_SEED = 2**64


class Subcommand(str, Enum):
    DECOMPOSE = "decompose"
    STAR = "star"
    BOUND = "bound"
    BOREL_CANTELLI = "borel-cantelli"
    CHECK = "check"


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


@dataclass(frozen=True, slots=True)
class RunConfig:
    """
    One invocation of the tool.

    Parameters
    ----------
    subcommand : Subcommand
        What to run.
    input_path : Path, optional
        Input document for ``decompose``, ``star`` and ``bound``.
    seed : int
        Unsigned 64-bit master seed of ``check``.
    trials : int
        Random instances per suite for ``check``.
    lemmas : tuple[str, ...]
        Suite filter for ``check``; empty runs all suites.
    output_format : OutputFormat
        Text tables or a JSON document.
    corollary : bool
        ``bound`` with the (T q_n)* weighting instead of the given weights.
    probabilities : tuple[Fraction, ...]
        p_1..p_N of ``borel-cantelli``.
    float_threshold : int, optional
        Checkpoints beyond it get float64 diagnostics in ``bound``.
    threads : int
        Worker threads of ``check``.
    save : bool
        Also write the ``check`` report to `CHECK_REPORTS_DIR`.
    """

    subcommand: Subcommand
    input_path: Path | None = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    lemmas: tuple[str, ...] = ()
    output_format: OutputFormat = OutputFormat.TEXT
    corollary: bool = False
    probabilities: tuple[Fraction, ...] = field(default_factory=tuple)
    float_threshold: int | None = None
    threads: int = THREADS
    save: bool = False

    def __post_init__(self):
        object.__setattr__(self, "subcommand", Subcommand(self.subcommand))
        object.__setattr__(self, "output_format", OutputFormat(self.output_format))
        if not 0 <= self.seed < MAX_SEED:
            raise PreconditionViolated(f"seed must be in [0, 2^64), got {self.seed}")
        if self.trials < 1:
            raise PreconditionViolated(f"trials must be positive, got {self.trials}")
        needs_input = {Subcommand.DECOMPOSE, Subcommand.STAR, Subcommand.BOUND}
        if self.subcommand in needs_input and self.input_path is None:
            raise PreconditionViolated(f"{self.subcommand.value} needs an input file")

    @property
    def structured(self) -> bool:
        return self.output_format is OutputFormat.STRUCTURED


def _decompose(config: RunConfig) -> tuple[int, str]:
    elements = load_elements(config.input_path)
    parts = [(x, *decompose(x)) for x in elements]
    if config.structured:
        doc = [
            {
                "x": format_element(x),
                "finite": format_element(xf),
                "infinite": format_element(xi),
            }
            for x, xf, xi in parts
        ]
        return 0, to_json(doc)
    rows = [tuple(str(v) for v in row) for row in parts]
    return 0, render_elements(rows, ["x", "x^f", "x^inf"])


def _star(config: RunConfig) -> tuple[int, str]:
    elements = load_elements(config.input_path)
    pairs: list[tuple[Element, Element]] = [(x, star(x)) for x in elements]
    if config.structured:
        doc = [{"x": format_element(x), "star": format_element(s)} for x, s in pairs]
        return 0, to_json(doc)
    return 0, render_elements([(str(x), str(s)) for x, s in pairs], ["x", "x*"])


def _bound(config: RunConfig) -> tuple[int, str]:
    doc = load_bound_document(config.input_path)
    if config.corollary:
        if doc.weights is not None:
            logger.warning("Ignoring weights_seq: the corollary uses v_n = (T q_n)*")
        report = corollary_m10(
            doc.t, doc.events, doc.checkpoints, float_threshold=config.float_threshold
        )
    else:
        report = theorem_m7(
            doc.weighted_sequence(),
            doc.checkpoints,
            float_threshold=config.float_threshold,
        )
    text = (
        to_json(bound_report_to_dict(report))
        if config.structured
        else render_bound_report(report)
    )
    return (0 if report.verdict else 1), text


def _borel_cantelli(config: RunConfig) -> tuple[int, str]:
    report = borel_cantelli(config.probabilities)
    text = (
        to_json(borel_cantelli_to_dict(report))
        if config.structured
        else render_borel_cantelli(report)
    )
    return (0 if report.verdict else 1), text


def render_check(results: dict) -> str:
    lines = []
    for entry in results["suites"]:
        total = entry["passed"] + entry["failed"]
        status = "PASS" if entry["failed"] == 0 else "FAIL"
        lines.append(f"{status}  {entry['name']:<8} {entry['passed']}/{total}")
        if entry["counterexample"] is not None:
            cx = entry["counterexample"]
            lines.append(f"      first failure at trial {cx['trial']}: {cx['claims']}")
            lines.append(f"      instance: {to_json(cx['instance'])}")
    lines.append(f"seed {results['seed']}, all passed: {results['all_passed']}")
    return "\n".join(lines)


def _check(config: RunConfig) -> tuple[int, str]:
    workflow = CheckWorkflow(
        config.lemmas, config.trials, config.seed, threads=config.threads
    )
    results = workflow.run()
    if config.save:
        workflow.save_results()
    text = to_json(results) if config.structured else render_check(results)
    return (0 if results["all_passed"] else 1), text


_DISPATCH = {
    Subcommand.DECOMPOSE: _decompose,
    Subcommand.STAR: _star,
    Subcommand.BOUND: _bound,
    Subcommand.BOREL_CANTELLI: _borel_cantelli,
    Subcommand.CHECK: _check,
}


def run(config: RunConfig) -> tuple[int, str]:
    """
    Execute one invocation.

    Returns
    -------
    tuple[int, str]
        Exit status (0 iff every verdict or property passed) and the report.

    Raises
    ------
    RieszError
        Malformed input, unknown lemmas and domain precondition failures
        propagate to the caller.
    """
    logger.debug("Running %s", config)
    return _DISPATCH[config.subcommand](config)


def repeat_probabilities(ps: Sequence[object], depth: int | None) -> tuple:
    """A single p with a depth is repeated depth times; otherwise ps as given."""
    ps = tuple(ps)
    if depth is None:
        return ps
    if len(ps) == 1:
        return ps * depth
    if len(ps) != depth:
        raise PreconditionViolated(
            f"--depth {depth} does not match {len(ps)} probabilities"
        )
    return ps
