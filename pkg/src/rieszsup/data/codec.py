from __future__ import annotations

from collections.abc import Callable, Mapping
from fractions import Fraction
from typing import Any, TypeVar

import yaml

from rieszsup.atoms import BandProjection, Element, Infinity, as_ext, format_ext
from rieszsup.bounds import WeightedEventSeq
from rieszsup.calculus import FiniteDirectedGrid, PeriodicSeq, TruncationSeq
from rieszsup.conditional import CondExp, ProbSpace, XMatrix
from rieszsup.errors import ParseError, RieszError

__doc__ = """
Textual forms of the domain values.

Elements are arrays of strings (``["1/2", "inf", "3"]``), bands are sorted
arrays of atom indices, periodic sequences are ``{"prefix": [...], "cycle":
[...]}`` and conditional expectations are ``{"weights": [...], "partition":
[[...], ...]}``. Documents are read with PyYAML, so JSON input works as well.
Every parse error names the field path of the offending value.
"""

T = TypeVar("T")


def load_text(text: str, source: str = "<input>") -> Any:
    """
    Parse a YAML or JSON document.

    Raises
    ------
    ParseError
        With ``source:line:column`` for syntax errors.
    """
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        location = source
        if mark is not None:
            location = f"{source}:{mark.line + 1}:{mark.column + 1}"
        problem = getattr(exc, "problem", None) or str(exc)
        raise ParseError(problem, location) from exc


def _expect_list(obj: Any, location: str) -> list:
    if not isinstance(obj, list):
        raise ParseError(f"expected an array, got {type(obj).__name__}", location)
    return obj


def _expect_mapping(obj: Any, location: str) -> Mapping:
    if not isinstance(obj, Mapping):
        raise ParseError(f"expected an object, got {type(obj).__name__}", location)
    return obj


def _field(obj: Mapping, key: str, location: str) -> Any:
    if key not in obj:
        raise ParseError(f"missing field '{key}'", location)
    return obj[key]


def parse_element(obj: Any, location: str = "element") -> Element:
    items = _expect_list(obj, location)
    if not items:
        raise ParseError("an element needs at least one coordinate", location)
    coords = []
    for i, item in enumerate(items):
        if isinstance(item, float):
            raise ParseError(
                f"write rationals as strings, got float {item!r}", f"{location}[{i}]"
            )
        try:
            coords.append(as_ext(item))
        except RieszError as exc:
            raise ParseError(str(exc), f"{location}[{i}]") from exc
    return Element(tuple(coords))


def format_element(x: Element) -> list[str]:
    return x.to_strings()


def parse_band(obj: Any, dim: int, location: str = "band") -> BandProjection:
    items = _expect_list(obj, location)
    for i, item in enumerate(items):
        if isinstance(item, bool) or not isinstance(item, int):
            raise ParseError(
                f"atom index must be an integer, got {item!r}", f"{location}[{i}]"
            )
        if not 0 <= item < dim:
            raise ParseError(f"atom {item} outside 0..{dim - 1}", f"{location}[{i}]")
    return BandProjection.from_atoms(items, dim)


def format_band(band: BandProjection) -> list[int]:
    return band.to_list()


def parse_periodic(
    obj: Any, item: Callable[[Any, str], T], location: str = "sequence"
) -> PeriodicSeq[T]:
    """Parse ``{"prefix": [...], "cycle": [...]}`` with `item` for each term."""
    mapping = _expect_mapping(obj, location)
    prefix = _expect_list(mapping.get("prefix", []), f"{location}.prefix")
    cycle = _expect_list(_field(mapping, "cycle", location), f"{location}.cycle")
    if not cycle:
        raise ParseError("cycle must be nonempty", f"{location}.cycle")
    try:
        return PeriodicSeq(
            tuple(item(t, f"{location}.prefix[{i}]") for i, t in enumerate(prefix)),
            tuple(item(t, f"{location}.cycle[{i}]") for i, t in enumerate(cycle)),
        )
    except ParseError:
        raise
    except RieszError as exc:
        raise ParseError(str(exc), location) from exc


def format_periodic(s: PeriodicSeq, item: Callable[[Any], Any]) -> dict[str, list]:
    return {
        "prefix": [item(t) for t in s.prefix],
        "cycle": [item(t) for t in s.cycle],
    }


def parse_prob_space(obj: Any, location: str = "space") -> ProbSpace:
    """A probability space, given as ``{"weights": [...]}`` or a bare array."""
    if isinstance(obj, Mapping):
        obj = _field(obj, "weights", location)
        location = f"{location}.weights"
    weights = parse_element(obj, location)
    if not weights.is_finite():
        raise ParseError("weights must be finite", location)
    try:
        return ProbSpace(weights.coords)
    except ValueError as exc:
        raise ParseError(str(exc), location) from exc


def parse_partition(
    obj: Any, dim: int, location: str = "partition"
) -> tuple[tuple[int, ...], ...]:
    blocks = _expect_list(obj, location)
    return tuple(
        tuple(parse_band(b, dim, f"{location}[{k}]").atoms)
        for k, b in enumerate(blocks)
    )


def build_cond_exp(
    space: ProbSpace, partition: Any, location: str = "partition"
) -> CondExp:
    """Attach a partition to a space; a missing partition is the trivial one."""
    if partition is None:
        return CondExp.trivial(space)
    blocks = parse_partition(partition, space.dim, location)
    try:
        return CondExp(space, blocks)
    except ValueError as exc:
        raise ParseError(str(exc), location) from exc


def parse_cond_exp(obj: Any, location: str = "cond_exp") -> CondExp:
    """Parse ``{"weights": [...], "partition": [[...]]}``."""
    mapping = _expect_mapping(obj, location)
    space = parse_prob_space(mapping, location)
    return build_cond_exp(space, mapping.get("partition"), f"{location}.partition")


def format_cond_exp(t: CondExp) -> dict[str, list]:
    return {
        "weights": [str(w) for w in t.space.weights],
        "partition": [list(b) for b in t.partition],
    }


def parse_elements_document(obj: Any) -> list[Element]:
    """Either a single element, an array of elements or ``{"elements": [...]}``."""
    if isinstance(obj, Mapping):
        obj = _field(obj, "elements", "document")
        return [
            parse_element(x, f"elements[{i}]")
            for i, x in enumerate(_expect_list(obj, "elements"))
        ]
    items = _expect_list(obj, "document")
    if items and all(isinstance(x, list) for x in items):
        return [parse_element(x, f"[{i}]") for i, x in enumerate(items)]
    return [parse_element(items, "element")]


def format_value(value: Any) -> Any:
    """
    Textual form of any domain value, in the same shape the parsers read.

    Used to serialize counterexamples so that they can be replayed.
    """
    if isinstance(value, Element):
        return format_element(value)
    if isinstance(value, BandProjection):
        return format_band(value)
    if isinstance(value, PeriodicSeq):
        return format_periodic(value, format_value)
    if isinstance(value, CondExp):
        return format_cond_exp(value)
    if isinstance(value, WeightedEventSeq):
        return {
            "cond_exp": format_cond_exp(value.t),
            "weights_seq": format_periodic(value.vs, format_element),
            "events_seq": format_periodic(value.qs, format_band),
        }
    if isinstance(value, FiniteDirectedGrid):
        return {"m": value.m, "values": [format_element(v) for v in value.values]}
    if isinstance(value, TruncationSeq):
        return {"limit": format_element(value.x), "power": value.power}
    if isinstance(value, XMatrix):
        return [[format_element(e) for e in row] for row in value.entries]
    if isinstance(value, Fraction | Infinity):
        return format_ext(value)
    if isinstance(value, Mapping):
        return {str(k): format_value(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [format_value(v) for v in value]
    return value
