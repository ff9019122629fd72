from fractions import Fraction

import numpy as np
import pytest

from rieszsup.atoms import INF, BandProjection, Element
from rieszsup.bounds import (
    K,
    R,
    R_j,
    S,
    WeightedEventSeq,
    k_squared_below_s,
    running_sums,
    split_identity_holds,
)
from rieszsup.calculus import PeriodicSeq
from rieszsup.conditional import CondExp, ProbSpace
from rieszsup.errors import IndexOutOfRange, NonPeriodicInput, PreconditionViolated
from rieszsup.workflows.generators import InstanceBuilder


@pytest.fixture
def t():
    return CondExp.trivial(ProbSpace.uniform(4))


@pytest.fixture
def seq(t):
    """Unit weights with events alternating {0, 1}, {0, 2}."""
    q1 = BandProjection.from_atoms((0, 1), 4)
    q2 = BandProjection.from_atoms((0, 2), 4)
    return WeightedEventSeq.unit_weights(t, PeriodicSeq((), (q1, q2)))


def test_precomputed_tables(seq):
    """
    Tests the class structure and the marginal and joint tables.
    """
    assert (seq.offset, seq.period, seq.n_classes) == (0, 2, 2)
    assert seq.marginals == (Element.constant(4, "1/2"),) * 2
    assert seq.joints[0][1] == seq.joints[1][0] == Element.constant(4, "1/4")
    assert [seq.class_of(i) for i in (1, 2, 3, 8)] == [0, 1, 0, 1]
    with pytest.raises(IndexOutOfRange):
        seq.class_of(0)


def test_counts(seq):
    """
    Tests class occurrence counts over finite and infinite ranges.
    """
    assert seq.counts(1, 5) == [3, 2]
    assert seq.counts(2, 5) == [2, 2]
    assert seq.counts(3, 2) == [0, 0]
    assert seq.counts(4, None) == [INF, INF]
    with pytest.raises(IndexOutOfRange):
        seq.counts(4, 2)


def test_quantities_by_hand(seq):
    """
    Tests K, S and R against values computed by hand.
    """
    assert K(seq, 1, 5) == Element.constant(4, "5/2")
    assert S(seq, 1, 5) == Element.constant(4, "19/2")
    assert R(seq, 1, 5) == Element.constant(4, 2)
    assert R_j(seq, 1, 5, 2) == Element.constant(4, "7/4")
    assert K(seq, 1, None) == Element.constant(4, INF)
    assert S(seq, 3, 2).is_zero()
    with pytest.raises(IndexOutOfRange):
        R_j(seq, 1, 5, 6)


def test_split_identity_and_cauchy_schwarz(seq):
    """
    Tests the splitting of S_{p,n} and K_{q,n}^2 <= S_{q,n}.
    """
    for p, q, n in [(1, 1, 1), (1, 3, 5), (2, 4, 9), (1, 5, 5)]:
        assert split_identity_holds(seq, p, q, n)
    for q, n in [(1, 1), (1, 6), (3, 10), (2, None)]:
        assert k_squared_below_s(seq, q, n)
    with pytest.raises(IndexOutOfRange):
        split_identity_holds(seq, 3, 2, 5)


def test_running_sums(seq):
    """
    Tests that the incremental K and S agree with direct evaluation.
    """
    steps = list(running_sums(seq, 1, 5))
    assert [m for m, _, _ in steps] == [1, 2, 3, 4, 5]
    for m, k, s in steps:
        assert k == K(seq, 1, m)
        assert s == S(seq, 1, m)
    _, k_last, s_last = steps[-1]
    assert k_last == Element.constant(4, "5/2")
    assert s_last == Element.constant(4, "19/2")
    assert list(running_sums(seq, 4, 3)) == []
    with pytest.raises(IndexOutOfRange):
        list(running_sums(seq, 0, 3))


@pytest.mark.parametrize("trial", range(25))
def test_running_sums_random(trial):
    """
    Tests the incremental sums on random weighted sequences with prefixes.
    """
    gen = InstanceBuilder(np.random.default_rng([13, trial]))
    seq = gen.weighted_seq(gen.cond_exp(gen.dim()))
    q = gen.integer(1, 4)
    for m, k, s in running_sums(seq, q, q + 6):
        assert (k, s) == (K(seq, q, m), S(seq, q, m))


def test_weighted_prefix_sequence():
    """
    Tests block-constant weights combined with a prefix of events.
    """
    t = CondExp(
        ProbSpace((Fraction(1, 6), Fraction(1, 3), Fraction(1, 4), Fraction(1, 4))),
        ((0, 1), (2, 3)),
    )
    everything = BandProjection.full(4)
    first = BandProjection.from_atoms((0,), 4)
    seq = WeightedEventSeq(
        t,
        PeriodicSeq.constant(Element.of(2, 2, 0, 0)),
        PeriodicSeq((everything,), (first,)),
    )
    assert (seq.offset, seq.period) == (1, 1)
    assert K(seq, 1, 1) == Element.of(2, 2, 0, 0)
    assert K(seq, 1, 3) == Element.of("10/3", "10/3", 0, 0)
    assert K(seq, 1, None) == Element.of("inf", "inf", 0, 0)
    assert split_identity_holds(seq, 1, 2, 6)


def test_weight_validation(t):
    """
    Tests that weights must be finite, positive, block-constant and periodic.
    """
    events = PeriodicSeq.constant(BandProjection.full(4))
    for weight in (Element.of(1, 1, 1, "inf"), Element.constant(4, -1)):
        with pytest.raises(PreconditionViolated):
            WeightedEventSeq(t, PeriodicSeq.constant(weight), events)
    with pytest.raises(PreconditionViolated, match="range of T"):
        WeightedEventSeq(t, PeriodicSeq.constant(Element.of(1, 2, 1, 1)), events)
    with pytest.raises(NonPeriodicInput):
        WeightedEventSeq(t, [Element.unit(4)], events)
