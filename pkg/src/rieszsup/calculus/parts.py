from __future__ import annotations

from rieszsup.atoms import (
    INF,
    Element,
    add,
    band_of,
    check_dims,
    leq,
    mul,
)
from rieszsup.atoms.element import ZERO
from rieszsup.atoms.ext_value import ext_reciprocal
from rieszsup.errors import PreconditionViolated

__doc__ = """
Finite and infinite parts of sup-completion elements, the star map (partial
inverse) and the multiplicative decomposition x = ab under x <= yz.
"""


def finite_part(x: Element) -> Element:
    """x^f: x on finite atoms, 0 on infinite atoms."""
    return Element(tuple(ZERO if c is INF else c for c in x.coords))


def infinite_part(x: Element) -> Element:
    """x^inf: inf exactly where x is inf, 0 elsewhere."""
    return Element(tuple(INF if c is INF else ZERO for c in x.coords))


def decompose(x: Element) -> tuple[Element, Element]:
    """
    Split x into disjoint parts x = x^f + x^inf.

    For elements outside the cone the infinite part is that of x+ (x- is
    always finite), which gives the same coordinate rule.

    Returns
    -------
    tuple[Element, Element]
        ``(finite_part, infinite_part)``.
    """
    return finite_part(x), infinite_part(x)


def star(x: Element) -> Element:
    """
    The partial inverse x*.

    Coordinatewise signed reciprocal on finite nonzero atoms and 0 on atoms
    where x is 0 or inf. The result is always finite and
    ``x * star(x) == unit_of_finite_part(x)``.
    """
    return Element(tuple(ext_reciprocal(c) for c in x.coords))


def unit_of_finite_part(x: Element) -> Element:
    """e_{x^f} = P_{x^f} e."""
    return band_of(finite_part(x)).unit()


def mul_decompose(x: Element, y: Element, z: Element) -> tuple[Element, Element]:
    """
    Factor x = ab with 0 <= a <= y and 0 <= b <= z, given 0 <= x <= yz.

    With P the projection on the band of y^f, the pair is
    ``(y, y* x)`` on P and ``(x (z* + e_{z^inf}), z^f + e_{z^inf})`` on P^d.

    Raises
    ------
    PreconditionViolated
        If an argument leaves the cone or x is not below yz.
    """
    check_dims(x, y, "mul_decompose")
    check_dims(y, z, "mul_decompose")
    if not (x.is_cone() and y.is_cone() and z.is_cone()):
        raise PreconditionViolated("mul_decompose expects cone elements")
    if not leq(x, mul(y, z)):
        raise PreconditionViolated(f"{x} is not below {mul(y, z)}")

    p = band_of(finite_part(y))
    pd = p.complement()
    e_z_inf = band_of(infinite_part(z)).unit()

    a_on_p = p.apply(y)
    b_on_p = p.apply(mul(star(y), x))
    a_off_p = pd.apply(mul(x, add(star(z), e_z_inf)))
    b_off_p = pd.apply(add(finite_part(z), e_z_inf))
    return add(a_on_p, a_off_p), add(b_on_p, b_off_p)
