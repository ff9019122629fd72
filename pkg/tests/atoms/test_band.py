from fractions import Fraction

import pytest

from rieszsup.atoms import (
    INF,
    BandProjection,
    Element,
    band_of,
    component,
    infinity_of,
    is_component_of_unit,
    join_bands,
    meet_bands,
    pi,
    pi_approx,
    pi_settles_at,
)
from rieszsup.errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated


@pytest.fixture
def bands():
    """Two overlapping bands on four atoms."""
    return BandProjection.from_atoms([0, 1], 4), BandProjection.from_atoms([1, 2], 4)


def test_boolean_algebra(bands):
    """
    Tests meet, join and complement on atom sets.
    """
    b, c = bands
    assert (b & c).atoms == (1,)
    assert (b | c).atoms == (0, 1, 2)
    assert (~b).atoms == (2, 3)
    assert b.compose(c) == b & c
    assert b & c <= b <= b | c
    assert len(b) == 2 and bool(b) and not BandProjection.empty(4)
    assert 0 in b and 3 not in b


def test_band_validation():
    """
    Tests that masks outside the ambient space are refused.
    """
    with pytest.raises(IndexOutOfRange):
        BandProjection(0b10000, 4)
    with pytest.raises(IndexOutOfRange):
        BandProjection.from_atoms([4], 4)
    with pytest.raises(DimensionMismatch):
        BandProjection.full(2) & BandProjection.full(3)


def test_projection_and_unit(bands):
    """
    Tests P_B x and the component P_B e of the unit.
    """
    b, _ = bands
    x = Element.of("inf", -1, 2, 3)
    assert b.apply(x) == Element.of("inf", -1, 0, 0)
    assert b(x) == b.apply(x)
    assert b.unit() == Element.of(1, 1, 0, 0)
    assert is_component_of_unit(b.unit())
    assert not is_component_of_unit(Element.of(2, 0))


def test_band_of_and_component():
    """
    Tests the principal band and the component e_x.
    """
    x = Element.of(0, -3, "inf", 0)
    assert band_of(x).atoms == (1, 2)
    assert component(x) == Element.of(0, 1, 1, 0)


def test_infinity_of_band(bands):
    """
    Tests inf_B, including the empty and the full band.
    """
    b, _ = bands
    assert infinity_of(b) == Element.of("inf", "inf", 0, 0)
    assert infinity_of(BandProjection.empty(2)).is_zero()
    assert infinity_of(BandProjection.full(2)) == Element.constant(2, INF)


def test_band_families(bands):
    """
    Tests joins and meets of finite families of bands.
    """
    b, c = bands
    assert join_bands([b, c], 4) == b | c
    assert meet_bands([b, c], 4) == b & c
    assert meet_bands([], 4) == BandProjection.full(4)
    assert join_bands([], 4) == BandProjection.empty(4)


def test_principal_projection():
    """
    Tests pi_x(a) = sup_n (a ^ n x) against its approximants.
    """
    x = Element.of("1/3", 0, "inf", 2)
    a = Element.of(2, 5, 7, "inf")
    assert pi(x, a) == Element.of(2, 0, 7, "inf")
    n = pi_settles_at(x, a)
    assert n == 6
    assert pi_approx(x, a, n).coords[:3] == pi(x, a).coords[:3]
    assert pi_approx(x, a, n - 1)[0] == Fraction(5, 3)
    with pytest.raises(PreconditionViolated):
        pi(Element.of(-1), Element.of(1))
