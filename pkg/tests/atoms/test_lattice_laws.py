from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from rieszsup.atoms import (
    INF,
    Element,
    add,
    band_of,
    join,
    leq,
    meet,
    mul,
    neg_part,
    pos_part,
    sub,
)

DIM = 3

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonnegative = st.fractions(min_value=0, max_value=5, max_denominator=6)
signed_coords = st.one_of(rationals, st.just(INF))
cone_coords = st.one_of(nonnegative, st.just(INF))


def elements(coords):
    return st.lists(coords, min_size=DIM, max_size=DIM).map(
        lambda cs: Element(tuple(cs))
    )


signed = elements(signed_coords)
cones = elements(cone_coords)
finite = elements(rationals)


@given(signed, signed, signed)
def test_addition_is_a_commutative_monoid(x, y, z):
    """
    Tests commutativity, associativity and the zero of addition.
    """
    assert add(x, y) == add(y, x)
    assert add(add(x, y), z) == add(x, add(y, z))
    assert add(x, Element.zeros(DIM)) == x


@given(signed, signed, signed)
def test_lattice_laws(x, y, z):
    """
    Tests idempotence, absorption and distributivity of join and meet.
    """
    assert join(x, x) == x and meet(x, x) == x
    assert join(x, meet(x, y)) == x
    assert meet(x, join(x, y)) == x
    assert meet(x, join(y, z)) == join(meet(x, y), meet(x, z))


@given(signed, signed, signed)
def test_order_is_compatible_with_addition(x, y, z):
    """
    Tests x <= y implies x + z <= y + z, and meet + join = sum.
    """
    low, high = meet(x, y), join(x, y)
    assert leq(add(low, z), add(high, z))
    assert add(low, high) == add(x, y)


@given(cones, cones, cones)
def test_product_on_the_cone(x, y, z):
    """
    Tests commutativity, associativity and distributivity of the product.
    """
    assert mul(x, y) == mul(y, x)
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert mul(x, Element.unit(DIM)) == x


@given(cones, cones)
def test_product_is_a_lattice_homomorphism_in_each_factor(x, y):
    """
    Tests u(x v y) = ux v uy for u >= 0.
    """
    u = Element.of(2, 0, Fraction(1, 3))
    assert mul(u, join(x, y)) == join(mul(u, x), mul(u, y))
    assert mul(u, meet(x, y)) == meet(mul(u, x), mul(u, y))


@given(signed)
def test_parts_decompose(x):
    """
    Tests x = x+ - x- with disjoint parts.
    """
    assert sub(pos_part(x), neg_part(x)) == x
    assert not band_of(pos_part(x)) & band_of(neg_part(x))


@given(finite, finite)
def test_subtraction_inverts_addition(x, y):
    """
    Tests (x + y) - y = x for finite elements.
    """
    assert sub(add(x, y), y) == x
