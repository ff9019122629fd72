from fractions import Fraction
from unittest.mock import patch

import pytest

from rieszsup.atoms import INF, BandProjection, Element
from rieszsup.bounds import (
    LimitStatus,
    Quadratic,
    WeightedEventSeq,
    limsup_projection,
    m5_claimed_limit,
    m5_limit_check,
    ratio_limit,
    rhs_limsup,
    rhs_value,
    tail_independence_check,
)
from rieszsup.calculus import PeriodicSeq
from rieszsup.conditional import CondExp, ProbSpace
from rieszsup.errors import IndexOutOfRange


@pytest.fixture
def seq():
    t = CondExp.trivial(ProbSpace.uniform(4))
    q1 = BandProjection.from_atoms((0, 1), 4)
    q2 = BandProjection.from_atoms((0, 2), 4)
    return WeightedEventSeq.unit_weights(t, PeriodicSeq((), (q1, q2)))


def test_quadratic_fit():
    """
    Tests exact interpolation from three consecutive values.
    """
    form = Quadratic.fit(Fraction(1), Fraction(3), Fraction(7))
    assert form == Quadratic(Fraction(1), Fraction(1), Fraction(1))
    assert form.at(4) == 21
    assert form.degree == 2 and form.leading == 1
    linear = Quadratic.fit(Fraction(0), Fraction(2), Fraction(4))
    assert (linear.degree, linear.leading) == (1, 2)
    assert Quadratic.fit(Fraction(0), Fraction(0), Fraction(0)).degree == -1


def _form(coeffs):
    return Quadratic(*(Fraction(c) for c in coeffs))


@pytest.mark.parametrize(
    "num, den, expected",
    [
        ((1, 0, 0), (2, 1, 0), Fraction(1, 2)),
        ((1, 0, 0), (0, 1, 5), INF),
        ((0, 1, 0), (3, 0, 0), Fraction(0)),
        ((0, 0, 4), (0, 0, 0), Fraction(0)),
        ((0, 0, 3), (0, 0, 2), Fraction(3, 2)),
    ],
)
def test_ratio_limit(num, den, expected):
    """
    Tests the limit of a ratio of quadratics read from leading terms.
    """
    assert ratio_limit(_form(num), _form(den)) == expected


def test_rhs_limsup_is_exact(seq):
    """
    Tests the exact limsup of the rhs, which odd n only approach.
    """
    projection = limsup_projection(seq)
    assert projection == BandProjection.full(4)
    assert rhs_value(seq, 1, 3, projection) == Element.constant(4, "9/14")
    assert rhs_limsup(seq, 1, projection) == Element.constant(4, "2/3")


def test_m5_limit(seq):
    """
    Tests that S*_{q,n} S_{p,n} converges to e when S_{q,inf} is infinite.
    """
    assert m5_claimed_limit(seq, 3, 1) == Element.unit(4)
    report = m5_limit_check(seq, 3, 1, 12)
    assert report.statuses == (LimitStatus.AGREE,) * 4
    assert report.holds
    assert report.limit == Element.unit(4)
    low, high = report.bracket
    assert low[0] <= report.last_value[0] <= high[0]
    assert report.last_value[0] > 1
    with pytest.raises(IndexOutOfRange):
        m5_limit_check(seq, 2, 3, 12)


def test_m5_limit_with_finite_tail():
    """
    Tests the claimed limit where S_{q,inf} vanishes on a block.
    """
    t = CondExp(ProbSpace.uniform(2), ((0,), (1,)))
    only_first = BandProjection.from_atoms((0,), 2)
    full = BandProjection.full(2)
    seq = WeightedEventSeq.unit_weights(t, PeriodicSeq((full,), (only_first,)))
    report = m5_limit_check(seq, 2, 1, 8)
    assert report.claimed == Element.of(1, 0)
    assert report.holds


@pytest.mark.parametrize(
    "limits, status, limit",
    [
        (
            [Element.unit(4), Element.of(1, 1, 1, 2)],
            LimitStatus.INCONCLUSIVE,
            None,
        ),
        (
            [Element.of(1, 1, 1, 3)] * 2,
            LimitStatus.DISAGREE,
            Element.of(1, 1, 1, 3),
        ),
    ],
)
def test_m5_limit_statuses(seq, limits, status, limit):
    """
    Tests that residue limits which differ, or miss the claimed value, fail.
    """
    with patch("rieszsup.bounds.limits.residue_limits", return_value=limits):
        report = m5_limit_check(seq, 3, 1, 12)
    assert report.statuses == (LimitStatus.AGREE,) * 3 + (status,)
    assert not report.holds
    assert report.limit == limit


def test_tail_independence(seq):
    """
    Tests that the limsup does not depend on the starting index.
    """
    report = tail_independence_check(seq, (1, 2, 5))
    assert report.holds
    assert {value for _, value in report.values} == {Element.constant(4, "2/3")}
    with pytest.raises(IndexOutOfRange):
        tail_independence_check(seq, (0, 1))
