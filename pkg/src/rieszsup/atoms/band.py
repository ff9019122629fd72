from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from rieszsup.errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated

from .element import ZERO, Element, check_dims, leq, meet, scale
from .ext_value import INF

__doc__ = """
Band projections of the atomic model.

Every band is principal and projectable, so a band is just a set of atoms.
`BandProjection` stores it as an integer bitmask over at most a few dozen
atoms, which keeps the Boolean algebra operations O(1) and lets tests
enumerate all bands of small spaces.
"""


@dataclass(frozen=True, slots=True)
class BandProjection:
    """
    A band B, identified with its projection P_B.

    Parameters
    ----------
    mask : int
        Bit i is set iff atom i belongs to the band.
    dim : int
        Number of atoms of the ambient space.
    """

    mask: int
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        if self.mask < 0 or self.mask >> self.dim:
            raise IndexOutOfRange(
                f"mask {self.mask:#b} has atoms outside 0..{self.dim - 1}"
            )

    @classmethod
    def from_atoms(cls, atoms: Iterable[int], dim: int) -> BandProjection:
        mask = 0
        for i in atoms:
            if not 0 <= i < dim:
                raise IndexOutOfRange(f"atom {i} outside 0..{dim - 1}")
            mask |= 1 << i
        return cls(mask, dim)

    @classmethod
    def full(cls, dim: int) -> BandProjection:
        return cls((1 << dim) - 1, dim)

    @classmethod
    def empty(cls, dim: int) -> BandProjection:
        return cls(0, dim)

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.dim) if self.mask >> i & 1)

    def __contains__(self, atom: int) -> bool:
        return bool(self.mask >> atom & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _other(self, other: BandProjection) -> int:
        if self.dim != other.dim:
            raise DimensionMismatch(self.dim, other.dim, op="band")
        return other.mask

    def __and__(self, other: BandProjection) -> BandProjection:
        return BandProjection(self.mask & self._other(other), self.dim)

    def __or__(self, other: BandProjection) -> BandProjection:
        return BandProjection(self.mask | self._other(other), self.dim)

    def __invert__(self) -> BandProjection:
        return self.complement()

    def __le__(self, other: BandProjection) -> bool:
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other: BandProjection) -> bool:
        return other <= self

    def complement(self) -> BandProjection:
        """The disjoint complement B^d (projection I - P_B)."""
        return BandProjection(~self.mask & ((1 << self.dim) - 1), self.dim)

    def compose(self, other: BandProjection) -> BandProjection:
        """P_B o P_C, which is the projection onto B n C."""
        return self & other

    def apply(self, x: Element) -> Element:
        """
        Project an element: keep coordinates on the band, zero elsewhere.

        Raises
        ------
        DimensionMismatch
            If `x` lives on another number of atoms.
        """
        if x.dim != self.dim:
            raise DimensionMismatch(self.dim, x.dim, op="apply")
        return Element(
            tuple(c if self.mask >> i & 1 else ZERO for i, c in enumerate(x.coords))
        )

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def unit(self) -> Element:
        """The component P_B e of the unit."""
        return self.apply(Element.unit(self.dim))

    def to_list(self) -> list[int]:
        """Textual form: sorted atom indices."""
        return list(self.atoms)


def band_of(x: Element) -> BandProjection:
    """The principal band B_x generated by x (support of |x|)."""
    mask = 0
    for i, c in enumerate(x.coords):
        if c is INF or c != 0:
            mask |= 1 << i
    return BandProjection(mask, x.dim)


def component(x: Element) -> Element:
    """e_x = P_x e, the component of the unit on the band of x."""
    return band_of(x).unit()


def infinity_of(band: BandProjection) -> Element:
    """inf_B: infinity on the atoms of B, zero elsewhere."""
    return Element(
        tuple(INF if band.mask >> i & 1 else ZERO for i in range(band.dim))
    )


def meet_bands(bands: Iterable[BandProjection], dim: int) -> BandProjection:
    acc = BandProjection.full(dim)
    for b in bands:
        acc = acc & b
    return acc


def join_bands(bands: Iterable[BandProjection], dim: int) -> BandProjection:
    acc = BandProjection.empty(dim)
    for b in bands:
        acc = acc | b
    return acc


def pi(x: Element, a: Element) -> Element:
    """
    pi_x(a) = sup_n (a ^ n x) for cone x and a, in closed form.

    On atoms where x > 0 the approximants reach a (or grow to inf when a is
    inf); elsewhere they stay 0.

    Raises
    ------
    PreconditionViolated
        If either argument leaves the cone.
    """
    check_dims(x, a, "pi")
    if not (x.is_cone() and a.is_cone()):
        raise PreconditionViolated("pi expects cone elements")
    return band_of(x).apply(a)


def pi_approx(x: Element, a: Element, n: int) -> Element:
    """The n-th approximant a ^ n x of `pi`."""
    return meet(a, scale(n, x))


def pi_settles_at(x: Element, a: Element) -> int:
    """Smallest n with pi_approx(x, a, n) == pi(x, a) on the finite atoms of a."""
    n = 1
    for xi, ai in zip(x.coords, a.coords):
        if ai is INF or xi is INF or xi == 0 or ai == 0:
            continue
        ratio = Fraction(ai) / xi
        n = max(n, -(-ratio.numerator // ratio.denominator))
    return n


def is_component_of_unit(x: Element) -> bool:
    """True iff x = P e for some band projection P."""
    return all(c is not INF and c in (0, 1) for c in x.coords) and leq(
        x, Element.unit(x.dim)
    )
