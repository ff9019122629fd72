import numpy as np
import pytest

from rieszsup.atoms import INF, BandProjection, Element, add, join_all, meet_all
from rieszsup.calculus import (
    FiniteDirectedGrid,
    NoLimit,
    PeriodicSeq,
    band_liminf,
    band_limsup,
    liminf,
    limsup,
    order_limit,
    partial_sum,
    series_sum,
    tail_inf,
    tail_sup,
)
from rieszsup.errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated
from rieszsup.workflows.generators import InstanceBuilder
from rieszsup.workflows.suites.nets import check_window_oracle


@pytest.fixture
def seq():
    """Prefix (5, 0), (inf, 1) then the cycle (1, 2), (3, 0)."""
    return PeriodicSeq(
        (Element.of(5, 0), Element.of("inf", 1)),
        (Element.of(1, 2), Element.of(3, 0)),
    )


def test_indexing(seq):
    """
    Tests term lookup, windows and shifts.
    """
    assert seq.offset == 2 and seq.period == 2 and seq.dim == 2
    assert seq.term(4) == Element.of(1, 2)
    assert seq.term(7) == Element.of(3, 0)
    assert seq.window(1, 3) == [Element.of("inf", 1), Element.of(1, 2)]
    assert seq.shift(3).term(0) == seq.term(3)
    assert seq.shift(5).term(4) == seq.term(9)
    with pytest.raises(IndexOutOfRange):
        seq.term(-1)


def test_validation():
    """
    Tests that an empty cycle and mixed dimensions are refused.
    """
    with pytest.raises(ValueError, match="nonempty"):
        PeriodicSeq((Element.of(1),), ())
    with pytest.raises(DimensionMismatch):
        PeriodicSeq((Element.of(1),), (Element.of(1, 2),))


def test_tail_bounds_and_limits(seq):
    """
    Tests tail suprema and infima and the exact limsup and liminf.
    """
    assert tail_sup(seq, 0) == Element.of("inf", 2)
    assert tail_inf(seq, 0) == Element.of(1, 0)
    assert tail_sup(seq, 2) == Element.of(3, 2)
    assert limsup(seq) == Element.of(3, 2)
    assert liminf(seq) == Element.of(1, 0)
    result = order_limit(seq)
    assert isinstance(result, NoLimit)
    assert result.limsup == Element.of(3, 2)


def test_order_limit_of_convergent_sequence():
    """
    Tests that a one-term cycle gives an order limit.
    """
    s = PeriodicSeq((Element.of(9),), (Element.of("inf"),))
    assert order_limit(s) == Element.of("inf")


def test_series_sum(seq):
    """
    Tests exact series: divergent where a cycle term is positive.
    """
    assert series_sum(seq, 0) == Element.of("inf", "inf")
    s = PeriodicSeq((Element.of(1, 2), Element.of("1/2", "inf")), (Element.of(0, 0),))
    assert series_sum(s, 0) == Element.of("3/2", "inf")
    assert series_sum(s, 1) == Element.of("1/2", "inf")
    assert series_sum(s, 5) == Element.of(0, 0)
    assert partial_sum(s, 0, 2) == Element.of("3/2", "inf")
    with pytest.raises(PreconditionViolated):
        series_sum(PeriodicSeq((), (Element.of(-1),)), 0)


def test_series_sum_rejects_negative_start():
    """
    Tests that a negative start index is rejected instead of wrapping around.
    """
    s = PeriodicSeq((Element.of(1), Element.of(2)), (Element.of(0),))
    with pytest.raises(IndexOutOfRange, match="negative index -1"):
        series_sum(s, -1)
    with pytest.raises(ValueError):
        series_sum(s, -2)


def test_disjoint_terms_are_not_enough_for_additivity():
    """
    Tests the regression on two atoms: x_n and y_n disjoint for each n, yet
    sup(x_n + y_n) differs from sup x_n + sup y_n.
    """
    x = PeriodicSeq((), (Element.of(1, 0), Element.of(0, 1)))
    y = PeriodicSeq((), (Element.of(0, 1), Element.of(1, 0)))
    total = x.zip_with(y, add)
    assert tail_sup(total, 0) == Element.of(1, 1)
    assert add(tail_sup(x, 0), tail_sup(y, 0)) == Element.of(2, 2)


def test_band_limits():
    """
    Tests limsup and liminf of band projections.
    """
    b = PeriodicSeq(
        (BandProjection.from_atoms([3], 4),),
        (BandProjection.from_atoms([0, 1], 4), BandProjection.from_atoms([1, 2], 4)),
    )
    assert band_limsup(b).atoms == (0, 1, 2)
    assert band_liminf(b).atoms == (1,)


def test_grid_limits():
    """
    Tests sup, inf and the limits of a 2 x 2 grid, which sit at its corner.
    """
    g = FiniteDirectedGrid(
        1, (Element.of(4), Element.of(1), Element.of("inf"), Element.of(2))
    )
    assert g.at(1, 0) == Element.of("inf")
    assert g.sup() == Element.of("inf")
    assert g.inf() == Element.of(1)
    assert g.limsup() == Element.of(2) == g.liminf()
    assert g.tail_sup((1, 0)) == Element.of("inf")
    assert not g.is_decreasing()
    with pytest.raises(ValueError, match="needs 4 values"):
        FiniteDirectedGrid(1, (Element.of(1),))


def test_limits_match_window_enumeration():
    """
    Tests tail bounds, limits and series against brute force over the prefix
    and three cycles, on 1000 seeded instances.
    """
    for trial in range(1000):
        gen = InstanceBuilder(np.random.default_rng([2024, trial]))
        result = check_window_oracle(gen)
        assert result.passed, (trial, result.failed)


def test_window_enumeration_by_hand(seq):
    """
    Tests the enumeration on the fixture directly.
    """
    stop = seq.offset + 3 * seq.period
    assert limsup(seq) == meet_all(
        join_all(seq.window(b, stop)) for b in range(stop - seq.period)
    )
    assert INF in tail_sup(seq, 1).coords
