from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

from rieszsup.errors import (
    DimensionMismatch,
    NegativeScaleOnInfinite,
    PreconditionViolated,
)

from .ext_value import (
    INF,
    ExtValue,
    as_ext,
    ext_add,
    ext_mul,
    ext_sub,
    format_ext,
)

__doc__ = """
The atomic model of the sup-completion X^s with unit e.

An `Element` is a vector of extended coordinates, one per atom. Finite
elements model X (which coincides with its universal completion in the atomic
model); elements with nonnegative coordinates model the cone X^s_+.
All operations are coordinatewise and return new immutable elements.
"""

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class Element:
    """
    Immutable atom-indexed vector of extended coordinates.

    Parameters
    ----------
    coords : tuple[ExtValue, ...]
        One coordinate per atom; anything accepted by `as_ext` is coerced.
    """

    coords: tuple[ExtValue, ...]

    def __post_init__(self):
        coords = tuple(as_ext(c) for c in self.coords)
        if not coords:
            raise ValueError("an Element needs at least one atom")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *values: object) -> Element:
        """Build an element from coordinates, e.g. ``Element.of(1, "inf")``."""
        return cls(tuple(values))

    @classmethod
    def zeros(cls, dim: int) -> Element:
        return cls((ZERO,) * dim)

    @classmethod
    def unit(cls, dim: int) -> Element:
        """The weak order unit e (all ones)."""
        return cls((ONE,) * dim)

    @classmethod
    def constant(cls, dim: int, value: object) -> Element:
        return cls((as_ext(value),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[ExtValue]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> ExtValue:
        return self.coords[index]

    def is_finite(self) -> bool:
        """True iff no coordinate is infinite (the element lies in X)."""
        return all(c is not INF for c in self.coords)

    def is_cone(self) -> bool:
        """True iff every coordinate is nonnegative (the element lies in X^s_+)."""
        return all(c is INF or c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return all(c is not INF and c == 0 for c in self.coords)

    def to_strings(self) -> list[str]:
        """Textual form: ``["1/2", "inf", "3"]``."""
        return [format_ext(c) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_strings()) + ")"

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        return sub(self, other)

    def __mul__(self, other: object) -> Element:
        if isinstance(other, Element):
            return mul(self, other)
        if isinstance(other, int | Fraction):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other: object) -> Element:
        if isinstance(other, int | Fraction):
            return scale(other, self)
        return NotImplemented

    def __neg__(self) -> Element:
        return scale(-1, self)

    def __or__(self, other: Element) -> Element:
        return join(self, other)

    def __and__(self, other: Element) -> Element:
        return meet(self, other)

    def __le__(self, other: Element) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return leq(self, other)

    def __ge__(self, other: Element) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return leq(other, self)

    def __pow__(self, p: int) -> Element:
        return int_power(self, p)


def check_dims(x: Element, y: Element, op: str = "operation") -> int:
    """Return the shared dimension or raise `DimensionMismatch`."""
    if x.dim != y.dim:
        raise DimensionMismatch(x.dim, y.dim, op=op)
    return x.dim


def add(x: Element, y: Element, *, strict: bool = False) -> Element:
    """
    Coordinatewise sum with infinity absorbing.

    Parameters
    ----------
    x, y : Element
        Operands of equal dimension.
    strict : bool, optional
        Refuse (-r) + inf, restricting addition to the cone plus X.

    Raises
    ------
    DimensionMismatch
        If the dimensions differ.
    UndefinedSum
        In strict mode, when a negative coordinate meets inf.
    """
    check_dims(x, y, "add")
    return Element(
        tuple(ext_add(a, b, strict=strict) for a, b in zip(x.coords, y.coords))
    )


def sub(x: Element, y: Element) -> Element:
    """x - y for finite y."""
    check_dims(x, y, "sub")
    return Element(tuple(ext_sub(a, b) for a, b in zip(x.coords, y.coords)))


def scale(lam: int | Fraction, x: Element) -> Element:
    """
    Scalar action; lam * inf = inf for lam > 0 and 0 * inf = 0.

    Raises
    ------
    NegativeScaleOnInfinite
        If lam < 0 and x has an infinite coordinate.
    """
    lam = Fraction(lam)
    if lam < 0:
        if not x.is_finite():
            raise NegativeScaleOnInfinite(f"cannot scale {x} by {lam}")
        return Element(tuple(lam * c for c in x.coords))
    return Element(tuple(ext_mul(lam, c) for c in x.coords))


def mul(x: Element, y: Element) -> Element:
    """
    The f-algebra product: coordinatewise, with 0 * inf = 0.

    Raises
    ------
    DimensionMismatch
        If the dimensions differ.
    UndefinedProduct
        If a negative coordinate meets inf.
    """
    check_dims(x, y, "mul")
    return Element(tuple(ext_mul(a, b) for a, b in zip(x.coords, y.coords)))


def join(x: Element, y: Element) -> Element:
    check_dims(x, y, "join")
    return Element(tuple(max(a, b) for a, b in zip(x.coords, y.coords)))


def meet(x: Element, y: Element) -> Element:
    check_dims(x, y, "meet")
    return Element(tuple(min(a, b) for a, b in zip(x.coords, y.coords)))


def leq(x: Element, y: Element) -> bool:
    check_dims(x, y, "leq")
    return all(a <= b for a, b in zip(x.coords, y.coords))


def join_all(elements: Iterable[Element]) -> Element:
    """Supremum of a nonempty finite family."""
    it = iter(elements)
    acc = next(it)
    for x in it:
        acc = join(acc, x)
    return acc


def meet_all(elements: Iterable[Element]) -> Element:
    """Infimum of a nonempty finite family."""
    it = iter(elements)
    acc = next(it)
    for x in it:
        acc = meet(acc, x)
    return acc


def sum_all(elements: Iterable[Element], dim: int) -> Element:
    acc = Element.zeros(dim)
    for x in elements:
        acc = add(acc, x)
    return acc


def pos_part(x: Element) -> Element:
    """x+ = x v 0."""
    return Element(tuple(max(c, ZERO) for c in x.coords))


def neg_part(x: Element) -> Element:
    """x- = -(x ^ 0); always finite."""
    return Element(tuple(ZERO if c is INF else max(-c, ZERO) for c in x.coords))


def abs_part(x: Element) -> Element:
    """|x| = x+ + x-."""
    return add(pos_part(x), neg_part(x))


def int_power(x: Element, p: int) -> Element:
    """
    Coordinatewise p-th power, inf ** p = inf.

    Raises
    ------
    PreconditionViolated
        If p < 1.
    """
    if p < 1:
        raise PreconditionViolated(f"power must be a positive integer, got {p}")
    return Element(tuple(INF if c is INF else c**p for c in x.coords))
