from __future__ import annotations

import logging
import zlib
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from rieszsup.config import CHECK_REPORTS_DIR
from rieszsup.data import format_value, to_json
from rieszsup.errors import RieszError, UnknownLemma

from .generators import InstanceBuilder, trial_rng
from .suites import ALL_LEMMA_SUITES, LemmaSuite, TrialResult

__doc__ = """
Defines the CheckWorkflow, the deterministic seeded harness that runs lemma
suites over random instances and collects pass/fail counts.
"""

logger = logging.getLogger(__name__)


def suite_stream(name: str) -> int:
    """Stable per-suite stream id, independent of the interpreter's hash seed."""
    return zlib.crc32(name.encode("utf-8"))


class CheckWorkflow:
    """
    Runs a selection of lemma suites for a fixed number of seeded trials.

    Trial ``t`` of suite ``name`` draws its instance from a generator seeded
    with ``(seed, crc32(name), t)``, so the outcome of every trial depends on
    nothing but the seed. Trials may run on worker threads; results are
    gathered in trial order, which keeps the report byte-identical for any
    thread count.
    """

    def __init__(
        self,
        lemmas: Sequence[str] | None,
        trials: int,
        seed: int,
        threads: int = 1,
    ):
        """
        Initializes the check workflow.

        Parameters
        ----------
        lemmas : Sequence[str] | None
            Suite names to run; ``None`` or empty runs every registered suite.
        trials : int
            Number of random instances per suite.
        seed : int
            Unsigned 64-bit master seed.
        threads : int, optional
            Worker threads per suite, by default 1.

        Raises
        ------
        UnknownLemma
            If a name is not in `ALL_LEMMA_SUITES`.
        """
        names = list(lemmas) if lemmas else list(ALL_LEMMA_SUITES)
        unknown = [n for n in names if n not in ALL_LEMMA_SUITES]
        if unknown:
            raise UnknownLemma(
                f"unknown lemma {', '.join(unknown)}; "
                f"known: {', '.join(ALL_LEMMA_SUITES)}"
            )
        self.suites: list[LemmaSuite] = [ALL_LEMMA_SUITES[n] for n in names]
        self.trials = trials
        self.seed = seed
        self.threads = max(1, threads)
        self.results: dict[str, Any] = {}

    def _trial(self, suite: LemmaSuite, trial: int) -> TrialResult:
        rng = trial_rng(self.seed, suite_stream(suite.name), trial)
        try:
            return suite.check(InstanceBuilder(rng))
        except RieszError as exc:
            logger.warning("%s trial %d raised %s", suite.name, trial, exc)
            return TrialResult({"error": str(exc)}, (type(exc).__name__,))

    def _run_suite(self, suite: LemmaSuite, pool: ThreadPoolExecutor) -> dict:
        logger.info("Running %s for %d trials...", suite.name, self.trials)
        outcomes = list(pool.map(lambda t: self._trial(suite, t), range(self.trials)))
        failures = [(t, r) for t, r in enumerate(outcomes) if not r.passed]
        entry: dict[str, Any] = {
            "name": suite.name,
            "statement": suite.statement,
            "passed": self.trials - len(failures),
            "failed": len(failures),
            "counterexample": None,
        }
        if failures:
            trial, result = failures[0]
            entry["counterexample"] = {
                "trial": trial,
                "claims": list(result.failed),
                "instance": format_value(result.instance),
            }
            logger.warning(
                "%s failed %d of %d trials, first at trial %d (%s)",
                suite.name,
                len(failures),
                self.trials,
                trial,
                ", ".join(result.failed),
            )
        else:
            logger.info("  -> %s passed %d/%d", suite.name, self.trials, self.trials)
        return entry

    def run(self) -> dict[str, Any]:
        """
        Executes every selected suite and populates `self.results`.

        Returns
        -------
        dict[str, Any]
            ``seed``, ``trials``, one entry per suite and ``all_passed``.
        """
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            entries = [self._run_suite(s, pool) for s in self.suites]
        self.results = {
            "seed": self.seed,
            "trials": self.trials,
            "suites": entries,
            "all_passed": all(e["failed"] == 0 for e in entries),
        }
        return self.results

    @property
    def all_passed(self) -> bool:
        return bool(self.results.get("all_passed"))

    def save_results(self, directory: Path = CHECK_REPORTS_DIR) -> Path | None:
        """Write the structured report as JSON; returns the file path."""
        if not self.results:
            logger.info("No check results to save.")
            return None
        directory.mkdir(parents=True, exist_ok=True)
        filepath = directory / f"check_seed{self.seed}_trials{self.trials}.json"
        filepath.write_text(to_json(self.results) + "\n")
        logger.info("Check report saved to: %s", filepath)
        return filepath
