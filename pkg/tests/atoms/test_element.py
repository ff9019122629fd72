from fractions import Fraction

import pytest

from rieszsup.atoms import (
    INF,
    Element,
    abs_part,
    add,
    int_power,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    mul,
    neg_part,
    pos_part,
    scale,
    sub,
    sum_all,
)
from rieszsup.errors import (
    DimensionMismatch,
    NegativeScaleOnInfinite,
    ParseError,
    PreconditionViolated,
    UndefinedProduct,
    UndefinedSum,
)


def test_coordinates_are_coerced():
    """
    Tests that ints, rational strings and 'inf' become exact coordinates.
    """
    x = Element.of(1, "1/2", "inf", Fraction(-2, 3))
    assert x.coords == (Fraction(1), Fraction(1, 2), INF, Fraction(-2, 3))
    assert x.to_strings() == ["1", "1/2", "inf", "-2/3"]
    assert str(x) == "(1, 1/2, inf, -2/3)"


def test_bad_coordinates_are_refused():
    """
    Tests that unreadable coordinates raise ParseError.
    """
    with pytest.raises(ParseError):
        Element.of("abc")
    with pytest.raises(ParseError):
        Element.of(True)
    with pytest.raises(ValueError, match="at least one atom"):
        Element(())


def test_predicates():
    """
    Tests finiteness, cone membership and zero detection.
    """
    assert Element.of(0, 1).is_finite()
    assert not Element.of(0, "inf").is_finite()
    assert Element.of(0, "inf").is_cone()
    assert not Element.of(-1, "inf").is_cone()
    assert Element.zeros(3).is_zero()
    assert not Element.of(0, "inf").is_zero()


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (Element.of(1, 2), Element.of(3, "-1/2"), Element.of(4, "3/2")),
        (Element.of(-5, "inf"), Element.of("inf", 2), Element.of("inf", "inf")),
    ],
)
def test_add_absorbs_infinity(x, y, expected):
    """
    Tests coordinatewise addition with infinity absorbing.
    """
    assert add(x, y) == expected
    assert x + y == expected


def test_strict_add_refuses_negative_with_infinity():
    """
    Tests that strict mode only adds the cone and finite elements.
    """
    with pytest.raises(UndefinedSum):
        add(Element.of(-1), Element.of("inf"), strict=True)
    assert add(Element.of(1), Element.of("inf"), strict=True) == Element.of("inf")


def test_sub_needs_a_finite_subtrahend():
    """
    Tests that inf - r = inf and that infinity cannot be subtracted.
    """
    assert sub(Element.of("inf", 3), Element.of(1, 1)) == Element.of("inf", 2)
    with pytest.raises(UndefinedSum):
        sub(Element.of(1), Element.of("inf"))


def test_zero_times_infinity_is_zero():
    """
    Tests the f-algebra product convention 0 * inf = 0.
    """
    x = Element.of(0, 2, "inf", "inf")
    y = Element.of("inf", "inf", 0, "1/3")
    assert mul(x, y) == Element.of(0, "inf", 0, "inf")
    assert scale(0, Element.of("inf")) == Element.of(0)


def test_undefined_products():
    """
    Tests that a negative coordinate never meets infinity.
    """
    with pytest.raises(UndefinedProduct):
        mul(Element.of(-1), Element.of("inf"))
    with pytest.raises(NegativeScaleOnInfinite):
        scale(-2, Element.of(1, "inf"))
    assert scale(-2, Element.of(1, "1/2")) == Element.of(-2, -1)


def test_dimension_mismatch():
    """
    Tests that binary operations refuse operands of different dimension.
    """
    with pytest.raises(DimensionMismatch, match="1 vs 2"):
        add(Element.of(1), Element.of(1, 2))
    with pytest.raises(DimensionMismatch):
        leq(Element.of(1), Element.of(1, 2))


def test_lattice_operations():
    """
    Tests joins, meets and the order, with infinity on top.
    """
    x, y = Element.of(1, "inf", -2), Element.of(3, 0, -1)
    assert join(x, y) == Element.of(3, "inf", -1)
    assert meet(x, y) == Element.of(1, 0, -2)
    assert leq(meet(x, y), x) and leq(x, join(x, y))
    assert x | y == join(x, y) and x & y == meet(x, y)
    assert not leq(x, y) and not leq(y, x)
    assert join_all([x, y, Element.zeros(3)]) == Element.of(3, "inf", 0)
    assert meet_all([x, y]) == meet(x, y)
    assert sum_all([], 2) == Element.zeros(2)


def test_positive_and_negative_parts():
    """
    Tests x+ , x- and |x|; the negative part is always finite.
    """
    x = Element.of(-2, "inf", "1/2", 0)
    assert pos_part(x) == Element.of(0, "inf", "1/2", 0)
    assert neg_part(x) == Element.of(2, 0, 0, 0)
    assert abs_part(x) == Element.of(2, "inf", "1/2", 0)
    assert neg_part(x).is_finite()


def test_int_power():
    """
    Tests coordinatewise powers with inf ** p = inf.
    """
    assert int_power(Element.of("1/2", "inf", -1), 3) == Element.of("1/8", "inf", -1)
    assert Element.of(2) ** 2 == Element.of(4)
    with pytest.raises(PreconditionViolated):
        int_power(Element.of(1), 0)


def test_elements_are_hashable_values():
    """
    Tests that equal elements hash alike, so they can key dictionaries.
    """
    assert {Element.of(1, "inf"): 1}[Element.of("1", "inf")] == 1
