from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction

from rieszsup.atoms import (
    INF,
    BandProjection,
    Element,
    ExtValue,
    add,
    band_of,
    join_bands,
    leq,
    mul,
    scale,
    sum_all,
)
from rieszsup.calculus import PeriodicSeq
from rieszsup.conditional import CondExp
from rieszsup.errors import IndexOutOfRange, NonPeriodicInput, PreconditionViolated

__doc__ = """
The K, S and R quantities of a weighted event sequence.

Both input sequences are eventually periodic, so every index falls into one of
finitely many classes: one per prefix position of the joint sequence and one
per position of its cycle. Every quantity is a sum of per-class terms weighted
by how often each class occurs in the index range, and an infinite range
simply gives every cycle class an infinite count (with 0 * inf = 0). This keeps
every evaluation exact and independent of the size of n.

Indices are 1-based: index i refers to term i - 1 of the underlying sequences.
"""

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class WeightedEventSeq:
    """
    Weights v_i in R(T)_+ paired with events Q_i.

    Parameters
    ----------
    t : CondExp
        The conditional expectation T.
    vs : PeriodicSeq[Element]
        Block-constant, finite, nonnegative weights.
    qs : PeriodicSeq[BandProjection]
        The events, as band projections.
    """

    t: CondExp
    vs: PeriodicSeq[Element]
    qs: PeriodicSeq[BandProjection]
    offset: int = field(init=False, repr=False, compare=False)
    period: int = field(init=False, repr=False, compare=False)
    marginals: tuple[Element, ...] = field(init=False, repr=False, compare=False)
    joints: tuple[tuple[Element, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if not isinstance(self.vs, PeriodicSeq) or not isinstance(
            self.qs, PeriodicSeq
        ):
            raise NonPeriodicInput("weights and events must be eventually periodic")
        for name, seq in (("weights", self.vs), ("events", self.qs)):
            if seq.dim != self.t.dim:
                raise PreconditionViolated(
                    f"{name} live on {seq.dim} atoms, T on {self.t.dim}"
                )
        for v in self.vs.prefix + self.vs.cycle:
            if not (v.is_finite() and v.is_cone()):
                raise PreconditionViolated(f"weight {v} is not finite and positive")
            if not self.t.is_block_constant(v):
                raise PreconditionViolated(f"weight {v} is not in the range of T")

        offset = max(self.vs.offset, self.qs.offset)
        period = math.lcm(self.vs.period, self.qs.period)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "period", period)

        n_classes = offset + period
        units = [self.qs.term(c).unit() for c in range(n_classes)]
        marginals = tuple(self.t.apply(u) for u in units)
        upper = {
            (a, b): self.t.apply(mul(units[a], units[b]))
            for a in range(n_classes)
            for b in range(a, n_classes)
        }
        joints = tuple(
            tuple(upper[min(a, b), max(a, b)] for b in range(n_classes))
            for a in range(n_classes)
        )
        object.__setattr__(self, "marginals", marginals)
        object.__setattr__(self, "joints", joints)
        logger.debug(
            "Weighted event sequence: %d atoms, %d prefix classes, period %d",
            self.dim,
            offset,
            period,
        )

    @classmethod
    def unit_weights(
        cls, t: CondExp, qs: PeriodicSeq[BandProjection]
    ) -> WeightedEventSeq:
        """The sequence with v_i = e for every i."""
        return cls(t, PeriodicSeq.constant(Element.unit(t.dim)), qs)

    @property
    def dim(self) -> int:
        return self.t.dim

    @property
    def n_classes(self) -> int:
        return self.offset + self.period

    def class_of(self, i: int) -> int:
        """Class of the 1-based index i."""
        if i < 1:
            raise IndexOutOfRange(f"indices start at 1, got {i}")
        if i <= self.offset:
            return i - 1
        return self.offset + (i - 1 - self.offset) % self.period

    def is_cycle_class(self, c: int) -> bool:
        return c >= self.offset

    def v(self, i: int) -> Element:
        return self.vs.term(self.class_of(i))

    def q(self, i: int) -> BandProjection:
        return self.qs.term(self.class_of(i))

    def weight_of_class(self, c: int) -> Element:
        return self.vs.term(c)

    def event_of_class(self, c: int) -> BandProjection:
        return self.qs.term(c)

    def qv_of_class(self, c: int) -> BandProjection:
        """Q_{v} = Q P_{v}: the event restricted to the band of its weight."""
        return self.event_of_class(c).compose(band_of(self.weight_of_class(c)))

    def qv_seq(self) -> PeriodicSeq[BandProjection]:
        classes = range(self.n_classes)
        bands = [self.qv_of_class(c) for c in classes]
        return PeriodicSeq(tuple(bands[: self.offset]), tuple(bands[self.offset :]))

    def k_term(self, c: int) -> Element:
        """v T(Q e) for class c."""
        return mul(self.weight_of_class(c), self.marginals[c])

    def pair_term(self, a: int, b: int) -> Element:
        """v_a v_b T(Q_a Q_b e) for classes a and b."""
        return mul(
            mul(self.weight_of_class(a), self.weight_of_class(b)), self.joints[a][b]
        )

    def counts(self, q: int, n: int | None) -> list[ExtValue]:
        """
        How often each class occurs among the indices q..n.

        ``n=None`` stands for n = inf, giving every cycle class an infinite
        count. ``n = q - 1`` is the empty range.

        Raises
        ------
        IndexOutOfRange
            If q < 1 or n < q - 1.
        """
        if q < 1:
            raise IndexOutOfRange(f"indices start at 1, got q={q}")
        if n is not None and n < q - 1:
            raise IndexOutOfRange(f"empty or reversed range q={q}, n={n}")
        out: list[ExtValue] = []
        for c in range(self.n_classes):
            first = c + 1
            if not self.is_cycle_class(c):
                inside = q <= first and (n is None or first <= n)
                out.append(Fraction(int(inside)))
                continue
            if n is None:
                out.append(INF)
                continue
            if first < q:
                first += -(-(q - first) // self.period) * self.period
            out.append(Fraction(0 if first > n else (n - first) // self.period + 1))
        return out

    def band_union(self, q: int, n: int) -> BandProjection:
        """The band of the join of Q_{v_i} e over q <= i <= n."""
        return join_bands(
            (
                self.qv_of_class(c)
                for c, k in enumerate(self.counts(q, n))
                if k != 0
            ),
            self.dim,
        )


def weighted_count(count: ExtValue, x: Element) -> Element:
    """count * x for a nonnegative x, with 0 * inf = 0."""
    if count is INF:
        return mul(Element.constant(x.dim, INF), x)
    return scale(count, x)


def count_product(a: ExtValue, b: ExtValue) -> ExtValue:
    if a == 0 or b == 0:
        return Fraction(0)
    if a is INF or b is INF:
        return INF
    return a * b


def K(seq: WeightedEventSeq, q: int, n: int | None) -> Element:
    """K_{q,n} = sum_{i=q}^{n} v_i T Q_i e; ``n=None`` is the full series."""
    counts = seq.counts(q, n)
    return sum_all(
        (weighted_count(k, seq.k_term(c)) for c, k in enumerate(counts) if k != 0),
        seq.dim,
    )


def S(seq: WeightedEventSeq, q: int, n: int | None) -> Element:
    """S_{q,n} = sum_{q <= i, j <= n} v_i v_j T Q_i Q_j e."""
    counts = seq.counts(q, n)
    active = [(c, k) for c, k in enumerate(counts) if k != 0]
    return sum_all(
        (
            weighted_count(count_product(ka, kb), seq.pair_term(a, b))
            for a, ka in active
            for b, kb in active
        ),
        seq.dim,
    )


def running_sums(
    seq: WeightedEventSeq, q: int, n: int
) -> Iterator[tuple[int, Element, Element]]:
    """
    Yield ``(m, K_{q,m}, S_{q,m})`` for m = q..n.

    Each step adds only the terms of index m: one K term and the pairs (i, m),
    (m, i) and (m, m) of S.

    Raises
    ------
    IndexOutOfRange
        If q < 1.
    """
    if q < 1:
        raise IndexOutOfRange(f"indices start at 1, got q={q}")
    k = s = Element.zeros(seq.dim)
    seen: list[int] = []
    for m in range(q, n + 1):
        c = seq.class_of(m)
        cross = sum_all((seq.pair_term(b, c) for b in seen), seq.dim)
        k = add(k, seq.k_term(c))
        s = add(add(s, scale(2, cross)), seq.pair_term(c, c))
        seen.append(c)
        yield m, k, s


def R_j(seq: WeightedEventSeq, q: int, n: int | None, j: int) -> Element:
    """
    R_{q,n}(j) = sum_{i=q}^{n} v_j v_i T Q_i Q_j e.

    Raises
    ------
    IndexOutOfRange
        If j < 1 or j > n.
    """
    if j < 1 or (n is not None and j > n):
        raise IndexOutOfRange(f"j={j} outside 1..{n}")
    cj = seq.class_of(j)
    counts = seq.counts(q, n)
    return sum_all(
        (
            weighted_count(k, seq.pair_term(cj, c))
            for c, k in enumerate(counts)
            if k != 0
        ),
        seq.dim,
    )


def R(seq: WeightedEventSeq, q: int, n: int | None) -> Element:
    """R_{q,n} = R_{q,n}(1)."""
    return R_j(seq, q, n, 1)


def split_identity_holds(seq: WeightedEventSeq, p: int, q: int, n: int) -> bool:
    """
    Check S_{p,n} = S_{p,q-1} + S_{q,n} + 2 sum_{j=p}^{q-1} R_{q,n}(j) exactly.

    Raises
    ------
    IndexOutOfRange
        Unless 1 <= p <= q <= n.
    """
    if not 1 <= p <= q <= n:
        raise IndexOutOfRange(f"need 1 <= p <= q <= n, got {p}, {q}, {n}")
    cross = sum_all((R_j(seq, q, n, j) for j in range(p, q)), seq.dim)
    right = add(add(S(seq, p, q - 1), S(seq, q, n)), scale(2, cross))
    return S(seq, p, n) == right


def k_squared_below_s(seq: WeightedEventSeq, q: int, n: int | None) -> bool:
    """K_{q,n}^2 <= S_{q,n}."""
    k = K(seq, q, n)
    return leq(mul(k, k), S(seq, q, n))
