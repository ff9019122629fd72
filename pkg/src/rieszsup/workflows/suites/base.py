from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from rieszsup.workflows.generators import InstanceBuilder

__doc__ = """
Building blocks of the lemma suites: a suite draws one random instance per
trial, evaluates every claim of its lemma on it and reports which claims
failed together with the instance.
"""


@dataclass(frozen=True, slots=True)
class TrialResult:
    """
    Outcome of one trial.

    Attributes
    ----------
    instance : dict[str, Any]
        The drawn values, serialized on failure.
    failed : tuple[str, ...]
        Names of the claims that did not hold.
    """

    instance: dict[str, Any]
    failed: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failed


def outcome(instance: dict[str, Any], **claims: bool) -> TrialResult:
    """Collect named boolean claims into a `TrialResult`."""
    return TrialResult(instance, tuple(name for name, ok in claims.items() if not ok))


@dataclass(frozen=True, slots=True)
class LemmaSuite:
    """A named property suite and the statement it exercises."""

    name: str
    statement: str
    check: Callable[[InstanceBuilder], TrialResult] = field(repr=False)
