from __future__ import annotations

__doc__ = """
The `calculus` package implements the decomposition and star calculus of the
sup-completion and exact order limits of sequences and nets.
"""

from .monotone import (
    Monomial,
    TruncationSeq,
    converges_in_order,
    mul_tails,
    star_tail,
    tail_limit,
)
from .parts import (
    decompose,
    finite_part,
    infinite_part,
    mul_decompose,
    star,
    unit_of_finite_part,
)
from .sequences import (
    FiniteDirectedGrid,
    NoLimit,
    PeriodicSeq,
    band_limsup,
    band_liminf,
    band_tail_join,
    liminf,
    limsup,
    order_limit,
    partial_sum,
    series_sum,
    tail_inf,
    tail_sup,
)

__all__ = [
    "FiniteDirectedGrid",
    "Monomial",
    "NoLimit",
    "PeriodicSeq",
    "TruncationSeq",
    "band_liminf",
    "band_limsup",
    "band_tail_join",
    "converges_in_order",
    "decompose",
    "finite_part",
    "infinite_part",
    "liminf",
    "limsup",
    "mul_decompose",
    "mul_tails",
    "order_limit",
    "partial_sum",
    "series_sum",
    "star",
    "star_tail",
    "tail_inf",
    "tail_limit",
    "tail_sup",
    "unit_of_finite_part",
]
