from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from rieszsup.atoms import BandProjection, join_bands, leq, mul
from rieszsup.atoms.ext_value import as_ext
from rieszsup.calculus import PeriodicSeq, star
from rieszsup.conditional import CondExp, ProbSpace
from rieszsup.errors import DepthTooLarge, PreconditionViolated

from .quantities import WeightedEventSeq, running_sums

__doc__ = """
The Borel-Cantelli experiment on a truncated product space.

A fixed finite atom space cannot carry infinitely many pairwise independent
nontrivial events, so the experiment builds the product model {0,1}^N with
product weights and takes P_n as the event "coordinate n is 1". Under the
trivial conditional expectation every pair of these events is independent,
and the union value T(V_{n<=N} P_n e) is compared with the Feng-Li-Shen
certificate S*_{1,N} K_{1,N}^2 at every depth up to N.
"""

logger = logging.getLogger(__name__)

MAX_DEPTH = 14


def product_space(probabilities: Sequence[Fraction]) -> ProbSpace:
    """
    Weights of {0,1}^N; atom k has coordinate n set iff bit n - 1 of k is set.
    """
    weights = []
    for atom in range(1 << len(probabilities)):
        w = Fraction(1)
        for bit, p in enumerate(probabilities):
            w *= p if atom >> bit & 1 else 1 - p
        weights.append(w)
    return ProbSpace(tuple(weights))


def coordinate_events(depth: int) -> list[BandProjection]:
    dim = 1 << depth
    return [
        BandProjection(sum(1 << a for a in range(dim) if a >> bit & 1), dim)
        for bit in range(depth)
    ]


@dataclass(frozen=True, slots=True)
class BorelCantelliReport:
    """
    Per-depth exact values of the truncated experiment.

    Attributes
    ----------
    probabilities : tuple[Fraction, ...]
        p_1, ..., p_N.
    union_values : tuple[Fraction, ...]
        T(V_{i<=n} P_i e) for n = 1..N, a constant element read at any atom.
    ratios : tuple[Fraction, ...]
        The certificate S*_{1,n} K_{1,n}^2 for n = 1..N.
    k_values, s_values : tuple[Fraction, ...]
        K_{1,n} and S_{1,n} for n = 1..N.
    pairwise_independent : bool
        T(P_i P_j e) == T P_i e . T P_j e for all i < j.
    variance_bound_holds : bool
        S_{1,n} <= K_{1,n}^2 + K_{1,n} at every n, as independence implies.
    closed_form_holds : bool
        Every union value equals 1 - prod_{i<=n} (1 - p_i).
    """

    probabilities: tuple[Fraction, ...]
    union_values: tuple[Fraction, ...]
    ratios: tuple[Fraction, ...]
    k_values: tuple[Fraction, ...]
    s_values: tuple[Fraction, ...]
    pairwise_independent: bool
    variance_bound_holds: bool
    closed_form_holds: bool

    @property
    def depth(self) -> int:
        return len(self.probabilities)

    @property
    def union_value(self) -> Fraction:
        return self.union_values[-1]

    @property
    def certificate(self) -> Fraction:
        return self.ratios[-1]

    @property
    def gap(self) -> Fraction:
        """1 - union value at full depth."""
        return 1 - self.union_value

    @property
    def certificate_holds(self) -> bool:
        return all(r <= u for r, u in zip(self.ratios, self.union_values))

    @property
    def ratios_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.ratios, self.ratios[1:]))

    @property
    def verdict(self) -> bool:
        return (
            self.certificate_holds
            and self.pairwise_independent
            and self.variance_bound_holds
            and self.closed_form_holds
        )


def borel_cantelli(probabilities: Sequence[object]) -> BorelCantelliReport:
    """
    Run the truncated product experiment for P(P_n) = p_n, n = 1..N.

    Raises
    ------
    DepthTooLarge
        If N exceeds `MAX_DEPTH` (2^N atoms).
    PreconditionViolated
        If N < 1 or some p_n lies outside (0, 1).
    """
    ps = tuple(as_ext(p) for p in probabilities)
    depth = len(ps)
    if depth > MAX_DEPTH:
        raise DepthTooLarge(f"depth {depth} exceeds {MAX_DEPTH} (2^{depth} atoms)")
    if depth < 1:
        raise PreconditionViolated("at least one probability is required")
    bad = [str(p) for p in ps if not 0 < p < 1]
    if bad:
        raise PreconditionViolated(f"probabilities must lie in (0, 1): {bad}")

    logger.info("Building product space of depth %d (%d atoms)", depth, 1 << depth)
    t = CondExp.trivial(product_space(ps))
    events = coordinate_events(depth)
    seq = WeightedEventSeq.unit_weights(
        t, PeriodicSeq(tuple(events), (BandProjection.empty(t.dim),))
    )
    independent = all(
        seq.joints[a][b] == mul(seq.marginals[a], seq.marginals[b])
        for a in range(depth)
        for b in range(a + 1, depth)
    )

    union_values, ratios, k_values, s_values = [], [], [], []
    closed_form = variance = True
    complement = Fraction(1)
    for n, k, s in running_sums(seq, 1, depth):
        union = t.apply(join_bands(events[:n], t.dim).unit())[0]
        complement *= 1 - ps[n - 1]
        closed_form = closed_form and union == 1 - complement
        variance = variance and leq(s, mul(k, k) + k)
        union_values.append(union)
        ratios.append(mul(star(s), mul(k, k))[0])
        k_values.append(k[0])
        s_values.append(s[0])
        logger.debug("Depth %d: union %s, certificate %s", n, union, ratios[-1])

    return BorelCantelliReport(
        probabilities=ps,
        union_values=tuple(union_values),
        ratios=tuple(ratios),
        k_values=tuple(k_values),
        s_values=tuple(s_values),
        pairwise_independent=independent,
        variance_bound_holds=variance,
        closed_form_holds=closed_form,
    )
