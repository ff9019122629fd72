from __future__ import annotations

from fractions import Fraction

import numpy as np

from rieszsup.atoms import INF, BandProjection, Element
from rieszsup.bounds import WeightedEventSeq
from rieszsup.calculus import FiniteDirectedGrid, PeriodicSeq, TruncationSeq
from rieszsup.conditional import CondExp, ProbSpace

__doc__ = """
Seeded random instance builders shared by the check harness and the tests.

Coordinates are drawn from a small rational grid, with an infinite coordinate
drawn with a fixed probability where the caller allows it. Every draw goes
through one `numpy.random.Generator`, so an instance is fully determined by
the generator's seed.
"""

GRID = tuple(
    Fraction(v)
    for v in ("0", "1/3", "-1/3", "1/2", "-1/2", "1", "-1", "2", "-2", "3")
)
CONE_GRID = tuple(v for v in GRID if v >= 0)
PROBABILITIES = tuple(Fraction(v) for v in ("1/4", "1/3", "1/2", "2/3", "3/4"))


def trial_rng(seed: int, stream: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial of one suite."""
    return np.random.default_rng(np.random.SeedSequence([seed, stream, trial]))


class InstanceBuilder:
    """
    Draws elements, bands, sequences and conditional expectations.

    Parameters
    ----------
    rng : np.random.Generator
        Source of randomness.
    max_dim : int, optional
        Largest number of atoms, by default 6.
    inf_prob : float, optional
        Probability of an infinite coordinate where allowed, by default 0.2.
    """

    def __init__(
        self, rng: np.random.Generator, max_dim: int = 6, inf_prob: float = 0.2
    ):
        self.rng = rng
        self.max_dim = max_dim
        self.inf_prob = inf_prob

    def dim(self, low: int = 1) -> int:
        return int(self.rng.integers(low, self.max_dim + 1))

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in ``[low, high]``."""
        return int(self.rng.integers(low, high + 1))

    def choice(self, values):
        return values[int(self.rng.integers(len(values)))]

    def coordinate(self, *, cone: bool, inf: bool):
        if inf and self.rng.random() < self.inf_prob:
            return INF
        return self.choice(CONE_GRID if cone else GRID)

    def element(self, d: int, *, cone: bool = False, inf: bool = True) -> Element:
        return Element(tuple(self.coordinate(cone=cone, inf=inf) for _ in range(d)))

    def cone(self, d: int) -> Element:
        """Nonnegative element, possibly with infinite coordinates."""
        return self.element(d, cone=True)

    def finite(self, d: int, *, cone: bool = False) -> Element:
        return self.element(d, cone=cone, inf=False)

    def positive(self, d: int) -> Element:
        """Finite element with every coordinate > 0 (a weak unit)."""
        return Element(tuple(self.choice(CONE_GRID[1:]) for _ in range(d)))

    def sign_pattern(self, d: int) -> Element:
        """Coordinates drawn from +1 and -1."""
        return Element(tuple(Fraction(self.choice((1, -1))) for _ in range(d)))

    def band(self, d: int) -> BandProjection:
        return BandProjection(int(self.rng.integers(0, 1 << d)), d)

    def sub_band(self, band: BandProjection) -> BandProjection:
        return band & self.band(band.dim)

    def periodic(
        self,
        d: int,
        *,
        cone: bool = True,
        inf: bool = True,
        max_prefix: int = 3,
        max_period: int = 3,
    ) -> PeriodicSeq[Element]:
        prefix = tuple(
            self.element(d, cone=cone, inf=inf)
            for _ in range(self.integer(0, max_prefix))
        )
        cycle = tuple(
            self.element(d, cone=cone, inf=inf)
            for _ in range(self.integer(1, max_period))
        )
        return PeriodicSeq(prefix, cycle)

    def convergent(
        self, d: int, *, cone: bool = True, inf: bool = True, max_prefix: int = 3
    ) -> PeriodicSeq[Element]:
        """A sequence with an order limit: random prefix, one-term cycle."""
        prefix = tuple(
            self.element(d, cone=cone, inf=inf)
            for _ in range(self.integer(0, max_prefix))
        )
        return PeriodicSeq(prefix, (self.element(d, cone=cone, inf=inf),))

    def band_seq(
        self, d: int, max_prefix: int = 3, max_period: int = 3
    ) -> PeriodicSeq[BandProjection]:
        prefix = tuple(self.band(d) for _ in range(self.integer(0, max_prefix)))
        cycle = tuple(self.band(d) for _ in range(self.integer(1, max_period)))
        return PeriodicSeq(prefix, cycle)

    def grid(
        self, d: int, m: int | None = None, *, cone: bool = True, inf: bool = True
    ) -> FiniteDirectedGrid:
        m = self.integer(1, 2) if m is None else m
        values = tuple(
            self.element(d, cone=cone, inf=inf) for _ in range((m + 1) ** 2)
        )
        return FiniteDirectedGrid(m, values)

    def decreasing_grid(self, d: int, m: int | None = None) -> FiniteDirectedGrid:
        """x(i, j) = top - sum_{k<i} a_k - sum_{l<j} b_l with finite cone steps."""
        m = self.integer(1, 2) if m is None else m
        top = self.element(d)
        row_steps = [self.finite(d, cone=True) for _ in range(m)]
        col_steps = [self.finite(d, cone=True) for _ in range(m)]
        values = []
        for i in range(m + 1):
            for j in range(m + 1):
                x = top
                for step in row_steps[:i] + col_steps[:j]:
                    x = x - step
                values.append(x)
        return FiniteDirectedGrid(m, tuple(values))

    def truncation(self, d: int, power: int = 1) -> TruncationSeq:
        return TruncationSeq(self.cone(d), power)

    def prob_space(self, d: int) -> ProbSpace:
        raw = [int(w) for w in self.rng.integers(1, 7, size=d)]
        total = sum(raw)
        return ProbSpace(tuple(Fraction(w, total) for w in raw))

    def partition(self, d: int) -> tuple[tuple[int, ...], ...]:
        labels = self.rng.integers(0, self.integer(1, d), size=d)
        blocks: dict[int, list[int]] = {}
        for atom, label in enumerate(labels):
            blocks.setdefault(int(label), []).append(atom)
        return tuple(tuple(b) for _, b in sorted(blocks.items()))

    def cond_exp(self, d: int) -> CondExp:
        return CondExp(self.prob_space(d), self.partition(d))

    def block_constant(
        self, t: CondExp, *, cone: bool = True, inf: bool = False
    ) -> Element:
        """An element of the range of T, or of its sup-completion with `inf`."""
        coords = [Fraction(0)] * t.dim
        for block in t.partition:
            value = self.coordinate(cone=cone, inf=inf)
            for i in block:
                coords[i] = value
        return Element(tuple(coords))

    def weighted_seq(
        self, t: CondExp, max_prefix: int = 3, max_period: int = 3
    ) -> WeightedEventSeq:
        vs = PeriodicSeq(
            tuple(self.block_constant(t) for _ in range(self.integer(0, max_prefix))),
            tuple(self.block_constant(t) for _ in range(self.integer(1, max_period))),
        )
        return WeightedEventSeq(t, vs, self.band_seq(t.dim, max_prefix, max_period))

    def probabilities(self, depth: int, *, constant: bool = False) -> list[Fraction]:
        if constant:
            return [self.choice(PROBABILITIES)] * depth
        return [self.choice(PROBABILITIES) for _ in range(depth)]
