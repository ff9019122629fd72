from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from rieszsup.atoms import (
    INF,
    BandProjection,
    Element,
    ExtValue,
    add,
    band_of,
    join_all,
    meet_all,
    mul,
    scale,
    sum_all,
)
from rieszsup.calculus import finite_part, infinite_part, star
from rieszsup.errors import IndexOutOfRange

from .quantities import K, R_j, S, WeightedEventSeq

__doc__ = """
Exact asymptotics of the quantity ratios.

Past the last prefix index, stepping n by one period adds exactly one
occurrence of every cycle class to the range q..n. Along each residue class of
n the quantities are therefore polynomials of degree at most two in the number
of periods k, fitted exactly from three consecutive values. The limit of a
ratio of two such polynomials is read off their leading terms, which decides
order limits and limsups without sampling error.
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Quadratic:
    """The polynomial ``a k^2 + b k + c`` in the period count k."""

    a: Fraction
    b: Fraction
    c: Fraction

    @classmethod
    def fit(cls, y0: Fraction, y1: Fraction, y2: Fraction) -> Quadratic:
        """Interpolate the values at k = 0, 1, 2."""
        a = (y2 - 2 * y1 + y0) / 2
        return cls(a, y1 - y0 - a, y0)

    def at(self, k: int) -> Fraction:
        return self.a * k * k + self.b * k + self.c

    @property
    def degree(self) -> int:
        """Polynomial degree, -1 for the zero polynomial."""
        if self.a:
            return 2
        if self.b:
            return 1
        return 0 if self.c else -1

    @property
    def leading(self) -> Fraction:
        if self.degree < 0:
            return Fraction(0)
        return (self.c, self.b, self.a)[self.degree]


def ratio_limit(num: Quadratic, den: Quadratic) -> ExtValue:
    """
    Limit of ``den(k)* num(k)`` as k -> inf, for eventually nonnegative forms.

    The star of a zero denominator is 0, so a vanishing denominator gives 0.
    """
    if den.degree < 0 or num.degree < 0:
        return Fraction(0)
    if num.degree > den.degree:
        return INF
    if num.degree < den.degree:
        return Fraction(0)
    return num.leading / den.leading


def residue_forms(
    seq: WeightedEventSeq, q: int, fn: Callable[[int], Element]
) -> list[tuple[Quadratic, ...]]:
    """
    Per residue class of n, the exact per-coordinate form of ``fn(n)``.

    Valid for any `fn` built from K, S and R over ranges starting at or
    after q and ending at n.
    """
    base = max(seq.offset, q)
    forms = []
    for r in range(seq.period):
        ys = [fn(base + r + k * seq.period) for k in range(3)]
        forms.append(
            tuple(
                Quadratic.fit(ys[0][w], ys[1][w], ys[2][w]) for w in range(seq.dim)
            )
        )
    return forms


def residue_limits(
    seq: WeightedEventSeq,
    q: int,
    num: Callable[[int], Element],
    den: Callable[[int], Element],
) -> list[Element]:
    """The limit of ``star(den(n)) * num(n)`` along each residue class of n."""
    num_forms = residue_forms(seq, q, num)
    den_forms = residue_forms(seq, q, den)
    return [
        Element(tuple(ratio_limit(a, b) for a, b in zip(nf, df)))
        for nf, df in zip(num_forms, den_forms)
    ]


def limsup_projection(seq: WeightedEventSeq) -> BandProjection:
    """P: the projection on the band of the infinite part of K_{1,inf}."""
    return band_of(infinite_part(K(seq, 1, None)))


def rhs_value(
    seq: WeightedEventSeq, q: int, n: int, projection: BandProjection
) -> Element:
    """P(S*_{q,n} K_{q,n}^2)."""
    k = K(seq, q, n)
    return projection.apply(mul(star(S(seq, q, n)), mul(k, k)))


def rhs_limsup(
    seq: WeightedEventSeq, q: int, projection: BandProjection
) -> Element:
    """Exact limsup over n of P(S*_{q,n} K_{q,n}^2)."""

    def k_squared(n: int) -> Element:
        k = K(seq, q, n)
        return mul(k, k)

    limits = residue_limits(seq, q, k_squared, lambda n: S(seq, q, n))
    return projection.apply(join_all(limits))


class LimitStatus(Enum):
    AGREE = "agree"
    DISAGREE = "disagree"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class M5LimitReport:
    """
    Outcome of checking S*_{q,n} S_{p,n} against its claimed order limit.

    Attributes
    ----------
    claimed : Element
        e_{S_{q,inf}} + S*_{q,inf}(S_{p,q-1} + 2 sum_j R^f_{q,inf}(j)).
    residue_limits : tuple[Element, ...]
        Exact limit along each residue class of n modulo the period.
    statuses : tuple[LimitStatus, ...]
        Per coordinate; inconclusive where residue limits differ.
    last_value : Element
        S*_{q,n} S_{p,n} at n = n_max.
    bracket : tuple[Element, Element]
        Coordinatewise min and max over the last period of samples.
    """

    q: int
    p: int
    n_max: int
    claimed: Element
    residue_limits: tuple[Element, ...]
    statuses: tuple[LimitStatus, ...]
    last_value: Element
    bracket: tuple[Element, Element]

    @property
    def holds(self) -> bool:
        return all(s is LimitStatus.AGREE for s in self.statuses)

    @property
    def limit(self) -> Element | None:
        if any(s is LimitStatus.INCONCLUSIVE for s in self.statuses):
            return None
        return self.residue_limits[0]


def m5_claimed_limit(seq: WeightedEventSeq, q: int, p: int) -> Element:
    s_q_inf = S(seq, q, None)
    cross = sum_all(
        (finite_part(R_j(seq, q, None, j)) for j in range(p, q)), seq.dim
    )
    inner = add(S(seq, p, q - 1), scale(2, cross))
    return add(band_of(s_q_inf).unit(), mul(star(s_q_inf), inner))


def m5_limit_check(
    seq: WeightedEventSeq, q: int, p: int, n_max: int
) -> M5LimitReport:
    """
    Decide whether S*_{q,n} S_{p,n} converges to its claimed limit.

    Raises
    ------
    IndexOutOfRange
        Unless 1 <= p <= q <= n_max.
    """
    if not 1 <= p <= q <= n_max:
        raise IndexOutOfRange(f"need 1 <= p <= q <= n_max, got {p}, {q}, {n_max}")

    def ratio(n: int) -> Element:
        return mul(star(S(seq, q, n)), S(seq, p, n))

    claimed = m5_claimed_limit(seq, q, p)
    limits = residue_limits(
        seq, q, lambda n: S(seq, p, n), lambda n: S(seq, q, n)
    )
    statuses = []
    for w in range(seq.dim):
        values = {lim[w] for lim in limits}
        if len(values) > 1:
            statuses.append(LimitStatus.INCONCLUSIVE)
        elif values == {claimed[w]}:
            statuses.append(LimitStatus.AGREE)
        else:
            statuses.append(LimitStatus.DISAGREE)

    window = [ratio(n) for n in range(max(q, n_max - seq.period + 1), n_max + 1)]
    report = M5LimitReport(
        q=q,
        p=p,
        n_max=n_max,
        claimed=claimed,
        residue_limits=tuple(limits),
        statuses=tuple(statuses),
        last_value=window[-1],
        bracket=(meet_all(window), join_all(window)),
    )
    logger.debug("Limit check q=%d p=%d: %s", q, p, [s.value for s in statuses])
    return report


@dataclass(frozen=True, slots=True)
class TailIndependenceReport:
    """Exact limsup of P S*_{q,n} K_{q,n}^2 for several starting indices q."""

    projection: BandProjection
    values: tuple[tuple[int, Element], ...]

    @property
    def holds(self) -> bool:
        return len({v for _, v in self.values}) <= 1


def tail_independence_check(
    seq: WeightedEventSeq, starts: tuple[int, ...] = (1, 2, 3)
) -> TailIndependenceReport:
    """
    Compare limsup_n P(S*_{q,n} K_{q,n}^2) across starting indices q.

    The limsup is the same for every q.
    """
    if not starts or min(starts) < 1:
        raise IndexOutOfRange(f"starting indices must be >= 1, got {starts}")
    projection = limsup_projection(seq)
    return TailIndependenceReport(
        projection=projection,
        values=tuple((q, rhs_limsup(seq, q, projection)) for q in starts),
    )
