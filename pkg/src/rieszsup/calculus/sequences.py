from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from itertools import product
from typing import Generic, TypeVar

from rieszsup.atoms import (
    INF,
    BandProjection,
    Element,
    join_all,
    join_bands,
    meet_all,
    meet_bands,
)
from rieszsup.atoms.element import ZERO
from rieszsup.errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated

__doc__ = """
Exact order limits of eventually periodic sequences and finite directed grids.

An eventually periodic sequence has finitely many distinct terms beyond any
index, so tail suprema, tail infima, limsup, liminf and nonnegative series all
have exact closed forms; nothing here truncates or uses a tolerance.
"""

T = TypeVar("T")
U = TypeVar("U")


@dataclass(frozen=True, slots=True)
class PeriodicSeq(Generic[T]):
    """
    Eventually periodic sequence ``prefix + cycle + cycle + ...`` (0-indexed).

    Parameters
    ----------
    prefix : tuple
        Leading terms, possibly empty.
    cycle : tuple
        Repeating block, nonempty.
    """

    prefix: tuple[T, ...]
    cycle: tuple[T, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("cycle must be nonempty")
        dims = {t.dim for t in self.prefix + self.cycle}
        if len(dims) > 1:
            a, b = sorted(dims)[:2]
            raise DimensionMismatch(a, b, op="PeriodicSeq")

    @classmethod
    def constant(cls, term: T) -> PeriodicSeq[T]:
        return cls((), (term,))

    @property
    def dim(self) -> int:
        return self.cycle[0].dim

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def offset(self) -> int:
        """Index of the first cycle term."""
        return len(self.prefix)

    def term(self, n: int) -> T:
        if n < 0:
            raise IndexOutOfRange(f"negative index {n}")
        if n < self.offset:
            return self.prefix[n]
        return self.cycle[(n - self.offset) % self.period]

    def window(self, start: int, stop: int) -> list[T]:
        """Terms with index in ``[start, stop)``."""
        return [self.term(n) for n in range(start, stop)]

    def tail_terms(self, beta: int) -> tuple[T, ...]:
        """The finitely many distinct positions reached by ``{term(n): n >= beta}``."""
        if beta < self.offset:
            return self.prefix[beta:] + self.cycle
        return self.cycle

    def map(self, fn: Callable[[T], U]) -> PeriodicSeq[U]:
        return PeriodicSeq(
            tuple(fn(t) for t in self.prefix), tuple(fn(t) for t in self.cycle)
        )

    def zip_with(
        self, other: PeriodicSeq[U], fn: Callable[[T, U], object]
    ) -> PeriodicSeq:
        """Termwise combination; the result has the common prefix and lcm period."""
        offset = max(self.offset, other.offset)
        period = math.lcm(self.period, other.period)
        prefix = tuple(fn(self.term(n), other.term(n)) for n in range(offset))
        cycle = tuple(
            fn(self.term(n), other.term(n)) for n in range(offset, offset + period)
        )
        return PeriodicSeq(prefix, cycle)

    def shift(self, k: int) -> PeriodicSeq[T]:
        """The sequence n -> term(n + k)."""
        if k <= self.offset:
            return PeriodicSeq(self.prefix[k:], self.cycle)
        r = (k - self.offset) % self.period
        return PeriodicSeq((), self.cycle[r:] + self.cycle[:r])


@dataclass(frozen=True, slots=True)
class NoLimit:
    """Returned by `order_limit` when limsup and liminf differ."""

    limsup: Element
    liminf: Element


def tail_sup(s: PeriodicSeq[Element], beta: int) -> Element:
    """sup {term(n) : n >= beta}."""
    return join_all(s.tail_terms(beta))


def tail_inf(s: PeriodicSeq[Element], beta: int) -> Element:
    """inf {term(n) : n >= beta}."""
    return meet_all(s.tail_terms(beta))


def limsup(s: PeriodicSeq[Element]) -> Element:
    """inf over beta of tail_sup, which is the supremum of the cycle."""
    return join_all(s.cycle)


def liminf(s: PeriodicSeq[Element]) -> Element:
    return meet_all(s.cycle)


def order_limit(s: PeriodicSeq[Element]) -> Element | NoLimit:
    """The order limit when limsup == liminf, else a `NoLimit` carrying both."""
    upper, lower = limsup(s), liminf(s)
    return upper if upper == lower else NoLimit(upper, lower)


def series_sum(s: PeriodicSeq[Element], start: int = 0) -> Element:
    """
    Exact value of sum_{n >= start} term(n) for nonnegative terms.

    A coordinate diverges to inf iff some cycle term is positive there, or a
    remaining prefix term is already inf; otherwise the finitely many prefix
    terms are summed exactly.

    Raises
    ------
    IndexOutOfRange
        If start is negative.
    PreconditionViolated
        If a term leaves the cone.
    """
    if start < 0:
        raise IndexOutOfRange(f"negative index {start}")
    terms = s.prefix + s.cycle
    if not all(t.is_cone() for t in terms):
        raise PreconditionViolated("series_sum expects nonnegative terms")
    remaining = s.prefix[start:] if start < s.offset else ()
    coords = []
    for i in range(s.dim):
        if any(t[i] is INF or t[i] > 0 for t in s.cycle):
            coords.append(INF)
            continue
        total = ZERO
        for t in remaining:
            if t[i] is INF:
                total = INF
                break
            total += t[i]
        coords.append(total)
    return Element(tuple(coords))


def partial_sum(s: PeriodicSeq[Element], start: int, stop: int) -> Element:
    """sum of term(n) for start <= n < stop."""
    acc = Element.zeros(s.dim)
    for n in range(start, stop):
        acc = acc + s.term(n)
    return acc


def band_limsup(s: PeriodicSeq[BandProjection]) -> BandProjection:
    """Atoms visited infinitely often: the union of the cycle bands."""
    return join_bands(s.cycle, s.dim)


def band_liminf(s: PeriodicSeq[BandProjection]) -> BandProjection:
    """Atoms eventually always visited: the intersection of the cycle bands."""
    return meet_bands(s.cycle, s.dim)


def band_tail_join(s: PeriodicSeq[BandProjection], beta: int) -> BandProjection:
    return join_bands(s.tail_terms(beta), s.dim)


@dataclass(frozen=True, slots=True)
class FiniteDirectedGrid:
    """
    A net indexed by ``{0..m} x {0..m}`` with the product order.

    Parameters
    ----------
    m : int
        Largest index along each axis.
    values : tuple[Element, ...]
        Row-major assignment, ``values[i * (m + 1) + j]`` sits at ``(i, j)``.
    """

    m: int
    values: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != (self.m + 1) ** 2:
            raise ValueError(
                f"grid of side {self.m + 1} needs {(self.m + 1) ** 2} values"
            )
        dims = {v.dim for v in self.values}
        if len(dims) > 1:
            a, b = sorted(dims)[:2]
            raise DimensionMismatch(a, b, op="FiniteDirectedGrid")

    @property
    def dim(self) -> int:
        return self.values[0].dim

    def indices(self) -> list[tuple[int, int]]:
        return list(product(range(self.m + 1), repeat=2))

    def at(self, i: int, j: int) -> Element:
        return self.values[i * (self.m + 1) + j]

    def map(self, fn: Callable[[Element], Element]) -> FiniteDirectedGrid:
        return FiniteDirectedGrid(self.m, tuple(fn(v) for v in self.values))

    def zip_with(
        self, other: FiniteDirectedGrid, fn: Callable[[Element, Element], Element]
    ) -> FiniteDirectedGrid:
        if other.m != self.m:
            raise ValueError("grids must share their index set")
        return FiniteDirectedGrid(
            self.m, tuple(fn(a, b) for a, b in zip(self.values, other.values))
        )

    def tail(self, beta: tuple[int, int]) -> list[Element]:
        return [
            self.at(i, j)
            for i, j in self.indices()
            if i >= beta[0] and j >= beta[1]
        ]

    def sup(self) -> Element:
        return join_all(self.values)

    def inf(self) -> Element:
        return meet_all(self.values)

    def tail_sup(self, beta: tuple[int, int]) -> Element:
        return join_all(self.tail(beta))

    def tail_inf(self, beta: tuple[int, int]) -> Element:
        return meet_all(self.tail(beta))

    def limsup(self) -> Element:
        return meet_all(self.tail_sup(b) for b in self.indices())

    def liminf(self) -> Element:
        return join_all(self.tail_inf(b) for b in self.indices())

    def is_decreasing(self) -> bool:
        for i, j in self.indices():
            here = self.at(i, j)
            if i < self.m and not self.at(i + 1, j) <= here:
                return False
            if j < self.m and not self.at(i, j + 1) <= here:
                return False
        return True
