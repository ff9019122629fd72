from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Any

from rieszsup.atoms import BandProjection, Element
from rieszsup.bounds import WeightedEventSeq
from rieszsup.calculus import PeriodicSeq
from rieszsup.conditional import CondExp
from rieszsup.errors import ParseError, RieszError

from .codec import (
    build_cond_exp,
    load_text,
    parse_band,
    parse_element,
    parse_elements_document,
    parse_periodic,
    parse_prob_space,
)

__doc__ = """
Input documents consumed by the command line.

A bound document looks like::

    space: {weights: ["1/4", "1/4", "1/4", "1/4"]}
    partition: [[0, 1, 2, 3]]          # optional, trivial when absent
    weights_seq: {prefix: [], cycle: [["1", "1", "1", "1"]]}   # optional, v = e
    events_seq: {prefix: [], cycle: [[0, 1], [0, 2]]}
    checkpoints: [1, 2, 3, 10, 50, 200]
"""

logger = logging.getLogger(__name__)


def read_document(path: Path) -> Any:
    """
    Read and parse a YAML or JSON file.

    Raises
    ------
    ParseError
        If the file cannot be read or parsed.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from exc
    logger.debug("Loaded %d bytes from %s", len(text), path)
    return load_text(text, str(path))


def load_elements(path: Path) -> list[Element]:
    return parse_elements_document(read_document(path))


@dataclass(frozen=True, slots=True)
class BoundDocument:
    """Parsed bound input: T, the events, the weights and the checkpoints."""

    t: CondExp
    events: PeriodicSeq[BandProjection]
    weights: PeriodicSeq[Element] | None
    checkpoints: tuple[int, ...]

    def weighted_sequence(self) -> WeightedEventSeq:
        """The weighted sequence, with v = e when no weights were given."""
        if self.weights is None:
            return WeightedEventSeq.unit_weights(self.t, self.events)
        return WeightedEventSeq(self.t, self.weights, self.events)


def parse_bound_document(obj: Any) -> BoundDocument:
    """
    Validate a bound document.

    Raises
    ------
    ParseError
        For missing or malformed fields, including values the domain types
        refuse (weights outside R(T)_+, mismatched dimensions).
    """
    if not isinstance(obj, Mapping):
        raise ParseError("a bound document must be an object", "document")
    if "space" not in obj:
        raise ParseError("missing field 'space'", "document")
    space = parse_prob_space(obj["space"], "space")
    t = build_cond_exp(space, obj.get("partition"))
    if "events_seq" not in obj:
        raise ParseError("missing field 'events_seq'", "document")
    events = parse_periodic(
        obj["events_seq"],
        partial(_band_item, space.dim),
        "events_seq",
    )
    weights = None
    if obj.get("weights_seq") is not None:
        weights = parse_periodic(obj["weights_seq"], parse_element, "weights_seq")

    raw = obj.get("checkpoints")
    if not isinstance(raw, list) or not raw:
        raise ParseError("checkpoints must be a nonempty array", "checkpoints")
    for i, n in enumerate(raw):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ParseError(
                f"checkpoint must be an integer >= 1, got {n!r}", f"checkpoints[{i}]"
            )
    doc = BoundDocument(t, events, weights, tuple(raw))
    try:
        doc.weighted_sequence()
    except ParseError:
        raise
    except RieszError as exc:
        raise ParseError(str(exc), "weights_seq") from exc
    return doc


def _band_item(dim: int, obj: Any, location: str) -> BandProjection:
    return parse_band(obj, dim, location)


def load_bound_document(path: Path) -> BoundDocument:
    return parse_bound_document(read_document(path))
