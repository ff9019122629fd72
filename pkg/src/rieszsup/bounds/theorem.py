from __future__ import annotations

import dataclasses
import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from rieszsup.atoms import BandProjection, Element, component, leq, mul, sum_all
from rieszsup.calculus import PeriodicSeq, band_limsup, finite_part, star
from rieszsup.conditional import CondExp
from rieszsup.errors import EmptyCheckpoints, IndexOutOfRange

from .limits import limsup_projection, rhs_limsup, rhs_value
from .quantities import K, S, WeightedEventSeq, count_product, weighted_count

__doc__ = """
The generalized Feng-Li-Shen lower bound on the conditional expectation of a
limsup of events, and its specialization with weights v_n = (T q_n)*.

For every pair of checkpoints q <= n the bound is backed by an exact finite
certificate, T(P V_{i=q}^{n} Q_{v_i} e) >= P(S*_{q,n} K_{q,n}^2), which is the
Cauchy-Schwarz step that makes the asymptotic inequality hold.
"""

logger = logging.getLogger(__name__)

Sample = tuple[int, Element]


@dataclass(frozen=True, slots=True)
class Certificate:
    """T(P V_{i=q}^{n} Q_{v_i} e) >= P(S*_{q,n} K_{q,n}^2) for one (q, n)."""

    q: int
    n: int
    left: Element
    right: Element

    @property
    def holds(self) -> bool:
        return leq(self.right, self.left)


@dataclass(frozen=True, slots=True)
class BoundReport:
    """
    Exact evaluation of the bound at a set of checkpoints.

    Attributes
    ----------
    lhs : Element
        T P limsup_n Q_{v_n} e.
    projection : BandProjection
        P, the band of the infinite part of K_{1,inf}.
    rhs_samples : tuple[tuple[int, Element], ...]
        P(S*_{1,n} K_{1,n}^2) at each checkpoint n.
    tail_start : int
        First index of the repeating cycle of the events and weights.
    tail_samples : tuple[tuple[int, Element], ...]
        P(S*_{q,n} K_{q,n}^2) with q = tail_start, at checkpoints n >= q.
        These are exact lower bounds of lhs at every finite n.
    rhs_limsup : Element
        The exact limsup_n P(S*_{1,n} K_{1,n}^2).
    certificates : tuple[Certificate, ...]
        One per checkpoint pair q <= n.
    finite_part_vanishes : bool
        True when K_{1,inf} has no finite part, so that P acts as the identity
        on every rhs sample.
    corollary_samples : tuple[tuple[int, Element], ...]
        Only for the (T q_n)* weighting: the rhs in its displayed form
        (sum_ij (Tq_i Tq_j)* T(q_i q_j))* (sum_i e_{Tq_i})^2, unprojected.
    corollary_matches : bool
        Whether the displayed form equals S*_{1,n} K_{1,n}^2 at every checkpoint.
    float_samples : tuple[tuple[int, tuple[float, ...]], ...]
        Float64 diagnostics past the configured threshold. Never part of the
        verdict.
    """

    lhs: Element
    projection: BandProjection
    rhs_samples: tuple[Sample, ...]
    tail_start: int
    tail_samples: tuple[Sample, ...]
    rhs_limsup: Element
    certificates: tuple[Certificate, ...]
    finite_part_vanishes: bool
    corollary_samples: tuple[Sample, ...] = ()
    corollary_matches: bool = True
    float_samples: tuple[tuple[int, tuple[float, ...]], ...] = ()

    @property
    def certificates_hold(self) -> bool:
        return all(c.holds for c in self.certificates)

    @property
    def verdict(self) -> bool:
        return (
            self.certificates_hold
            and all(leq(s, self.lhs) for _, s in self.tail_samples)
            and leq(self.rhs_limsup, self.lhs)
            and self.corollary_matches
        )


def _checkpoints(checkpoints: Iterable[int]) -> list[int]:
    points = sorted(set(checkpoints))
    if not points:
        raise EmptyCheckpoints("at least one checkpoint is required")
    if points[0] < 1:
        raise IndexOutOfRange(f"checkpoints start at 1, got {points[0]}")
    return points


def float_rhs_trajectory(
    seq: WeightedEventSeq,
    n_max: int,
    projection: BandProjection | None = None,
    q: int = 1,
) -> np.ndarray:
    """
    Float64 trajectory of P(S*_{q,n} K_{q,n}^2) for n = q..n_max.

    K and S are updated incrementally from the class tables, so long horizons
    stay cheap. Row ``n - q`` holds the value at n.
    """
    if not 1 <= q <= n_max:
        raise IndexOutOfRange(f"need 1 <= q <= n_max, got {q}, {n_max}")
    n_classes, dim = seq.n_classes, seq.dim
    pair = np.array(
        [
            [[float(c) for c in seq.pair_term(a, b)] for b in range(n_classes)]
            for a in range(n_classes)
        ]
    )
    k_terms = np.array([[float(c) for c in seq.k_term(a)] for a in range(n_classes)])
    mask = np.ones(dim)
    if projection is not None:
        mask = np.array([1.0 if w in projection else 0.0 for w in range(dim)])

    counts = np.zeros(n_classes)
    k = np.zeros(dim)
    s = np.zeros(dim)
    out = np.empty((n_max - q + 1, dim))
    for row, n in enumerate(range(q, n_max + 1)):
        c = seq.class_of(n)
        s += 2.0 * counts @ pair[:, c, :] + pair[c, c]
        counts[c] += 1.0
        k += k_terms[c]
        out[row] = np.divide(k * k, s, out=np.zeros(dim), where=s > 0) * mask
    return out


def theorem_m7(
    seq: WeightedEventSeq,
    checkpoints: Iterable[int],
    *,
    float_threshold: int | None = None,
) -> BoundReport:
    """
    Evaluate T P limsup_n Q_{v_n} e >= limsup_n P(S*_{1,n} K_{1,n}^2) exactly.

    Parameters
    ----------
    seq : WeightedEventSeq
        Weights and events.
    checkpoints : Iterable[int]
        Indices n at which the rhs is sampled; certificates are produced for
        every pair q <= n among them.
    float_threshold : int, optional
        When the largest checkpoint exceeds it, float64 diagnostics are
        attached for checkpoints beyond it.

    Raises
    ------
    EmptyCheckpoints
        If no checkpoint is given.
    IndexOutOfRange
        If a checkpoint is below 1.
    """
    points = _checkpoints(checkpoints)
    t = seq.t
    projection = limsup_projection(seq)
    limsup_band = band_limsup(seq.qv_seq())
    lhs = t.apply(projection.compose(limsup_band).unit())

    rhs_samples = tuple((n, rhs_value(seq, 1, n, projection)) for n in points)
    tail_start = seq.offset + 1
    if tail_start == 1:
        tail_samples = rhs_samples
    else:
        tail_samples = tuple(
            (n, rhs_value(seq, tail_start, n, projection))
            for n in points
            if n >= tail_start
        )

    certificates = []
    for i, q in enumerate(points):
        for n in points[i:]:
            left = t.apply(projection.compose(seq.band_union(q, n)).unit())
            certificates.append(
                Certificate(q, n, left, rhs_value(seq, q, n, projection))
            )

    float_samples: tuple[tuple[int, tuple[float, ...]], ...] = ()
    if float_threshold is not None and points[-1] > float_threshold:
        trajectory = float_rhs_trajectory(seq, points[-1], projection)
        float_samples = tuple(
            (n, tuple(float(x) for x in trajectory[n - 1]))
            for n in points
            if n > float_threshold
        )

    report = BoundReport(
        lhs=lhs,
        projection=projection,
        rhs_samples=rhs_samples,
        tail_start=tail_start,
        tail_samples=tail_samples,
        rhs_limsup=rhs_limsup(seq, 1, projection),
        certificates=tuple(certificates),
        finite_part_vanishes=finite_part(K(seq, 1, None)).is_zero(),
        float_samples=float_samples,
    )
    failed = [(c.q, c.n) for c in certificates if not c.holds]
    if failed:
        logger.warning("Certificates failed at %s", failed)
    logger.info(
        "Bound evaluated at %d checkpoints with %d certificates, verdict %s",
        len(points),
        len(certificates),
        report.verdict,
    )
    return report


def star_weights(
    t: CondExp, qs: PeriodicSeq[BandProjection]
) -> WeightedEventSeq:
    """The weighting v_n = (T q_n)* with q_n = Q_n e."""
    return WeightedEventSeq(t, qs.map(lambda band: star(t.apply(band.unit()))), qs)


def corollary_form(seq: WeightedEventSeq, n: int) -> Element:
    """(sum_{i,j<=n} (Tq_i Tq_j)* T(q_i q_j))* (sum_{i<=n} e_{Tq_i})^2."""
    active = [(c, k) for c, k in enumerate(seq.counts(1, n)) if k != 0]
    tq = seq.marginals
    inner = sum_all(
        (
            weighted_count(
                count_product(ka, kb), mul(star(mul(tq[a], tq[b])), seq.joints[a][b])
            )
            for a, ka in active
            for b, kb in active
        ),
        seq.dim,
    )
    units = sum_all((weighted_count(k, component(tq[c])) for c, k in active), seq.dim)
    return mul(star(inner), mul(units, units))


def corollary_m10(
    t: CondExp,
    qs: PeriodicSeq[BandProjection],
    checkpoints: Iterable[int],
    *,
    float_threshold: int | None = None,
) -> BoundReport:
    """
    The bound with weights v_n = (T q_n)*, with the rhs in its displayed form.

    The displayed form is checked against S*_{1,n} K_{1,n}^2 at every
    checkpoint; the verdict keeps the projection P of the general bound.
    """
    seq = star_weights(t, qs)
    report = theorem_m7(seq, checkpoints, float_threshold=float_threshold)
    samples = tuple((n, corollary_form(seq, n)) for n, _ in report.rhs_samples)
    matches = True
    for n, value in samples:
        k = K(seq, 1, n)
        if value != mul(star(S(seq, 1, n)), mul(k, k)):
            logger.warning("Displayed form differs from S* K^2 at n=%d", n)
            matches = False
    return dataclasses.replace(
        report, corollary_samples=samples, corollary_matches=matches
    )
