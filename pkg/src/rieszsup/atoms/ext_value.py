from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

from rieszsup.errors import ParseError, UndefinedProduct, UndefinedSum

__doc__ = """
Coordinate arithmetic on the extended half-line (-inf, +inf].

A coordinate is either an exact `fractions.Fraction` or the singleton `INF`.
There is no negative infinity: sup-completion coordinates are bounded below.
"""


@total_ordering
class Infinity:
    """
    The greatest coordinate value.

    Compares above every rational and equal only to itself. Arithmetic lives
    in `ext_add`, `ext_sub` and `ext_mul`, which carry the 0 * inf = 0
    convention.
    """

    _instance: Infinity | None = None

    def __new__(cls) -> Infinity:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, int | Fraction):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, int | Fraction):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash("rieszsup.inf")

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ExtValue = Fraction | Infinity


def is_inf(value: ExtValue) -> bool:
    """Return True if `value` is the infinite coordinate."""
    return value is INF


def as_ext(value: object) -> ExtValue:
    """
    Coerce a Python value into an extended coordinate.

    Accepts `Fraction`, `int`, `Infinity`, the strings ``"inf"``, ``"n"`` and
    ``"p/q"``, and floats (``math.inf`` maps to `INF`, finite floats are
    converted exactly).

    Raises
    ------
    ParseError
        If the value cannot be read as a rational or ``inf``.
    """
    if value is INF:
        return INF
    if isinstance(value, bool):
        raise ParseError(f"boolean is not a coordinate: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if math.isnan(value) or value == -math.inf:
            raise ParseError(f"coordinate out of (-inf, inf]: {value!r}")
        return INF if value == math.inf else Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in {"inf", "+inf", "infinity", "∞"}:
            return INF
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational or 'inf': {value!r}") from exc
    raise ParseError(f"unsupported coordinate type: {type(value).__name__}")


def format_ext(value: ExtValue) -> str:
    """Render a coordinate as ``"inf"``, ``"n"`` or ``"p/q"``."""
    return "inf" if value is INF else str(value)


def ext_add(a: ExtValue, b: ExtValue, *, strict: bool = False) -> ExtValue:
    """
    Add two coordinates with infinity absorbing.

    With ``strict=True`` a negative rational paired with infinity is refused,
    which restricts addition to the cone plus finite elements.
    """
    if a is INF or b is INF:
        if strict and ((a is not INF and a < 0) or (b is not INF and b < 0)):
            raise UndefinedSum("negative coordinate added to inf in strict mode")
        return INF
    return a + b


def ext_sub(a: ExtValue, b: ExtValue) -> ExtValue:
    """Subtract a finite coordinate; inf - r = inf."""
    if b is INF:
        raise UndefinedSum("cannot subtract an infinite coordinate")
    if a is INF:
        return INF
    return a - b


def ext_mul(a: ExtValue, b: ExtValue) -> ExtValue:
    """
    Multiply two coordinates: 0 * inf = 0, r * inf = inf for r > 0.

    Raises
    ------
    UndefinedProduct
        If infinity meets a negative rational.
    """
    if a is INF or b is INF:
        other = b if a is INF else a
        if other is INF:
            return INF
        if other < 0:
            raise UndefinedProduct(f"{format_ext(other)} * inf has no value")
        return INF if other > 0 else Fraction(0)
    return a * b


def ext_reciprocal(value: ExtValue) -> Fraction:
    """Signed reciprocal on finite nonzero values, 0 on 0 and inf."""
    if value is INF or value == 0:
        return Fraction(0)
    return 1 / value
