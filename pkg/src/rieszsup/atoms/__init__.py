from __future__ import annotations

__doc__ = """
The `atoms` package provides the fundamental data structures of the atomic
model: extended coordinates, elements of the sup-completion and band
projections.
"""

from .band import (
    BandProjection,
    band_of,
    component,
    infinity_of,
    is_component_of_unit,
    join_bands,
    meet_bands,
    pi,
    pi_approx,
    pi_settles_at,
)
from .element import (
    Element,
    abs_part,
    add,
    check_dims,
    int_power,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    mul,
    neg_part,
    pos_part,
    scale,
    sub,
    sum_all,
)
from .ext_value import INF, ExtValue, Infinity, as_ext, format_ext, is_inf

__all__ = [
    "INF",
    "BandProjection",
    "Element",
    "ExtValue",
    "Infinity",
    "abs_part",
    "add",
    "as_ext",
    "band_of",
    "check_dims",
    "component",
    "format_ext",
    "infinity_of",
    "int_power",
    "is_component_of_unit",
    "is_inf",
    "join",
    "join_all",
    "join_bands",
    "leq",
    "meet",
    "meet_all",
    "meet_bands",
    "mul",
    "neg_part",
    "pi",
    "pi_approx",
    "pi_settles_at",
    "pos_part",
    "scale",
    "sub",
    "sum_all",
]
