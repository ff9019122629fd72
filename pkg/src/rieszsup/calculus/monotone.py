from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from rieszsup.atoms import INF, Element, meet
from rieszsup.atoms.element import ZERO
from rieszsup.errors import PreconditionViolated

__doc__ = """
Increasing generators x_n = x ^ n^k e and their exact per-coordinate tails.

Past a settling index every coordinate of such a generator is a monomial
c * n^k in n: finite coordinates are constants (k = 0) and infinite
coordinates grow like n^k. Products and stars of monomials are monomials, so
the order limit of any sequence built from generators with `mul` and `star`
is read off the exponents exactly.
"""


@dataclass(frozen=True, slots=True)
class Monomial:
    """Eventual form ``coeff * n ** power`` of one coordinate."""

    coeff: Fraction
    power: int

    def __mul__(self, other: Monomial) -> Monomial:
        if self.coeff == 0 or other.coeff == 0:
            return Monomial(ZERO, 0)
        return Monomial(self.coeff * other.coeff, self.power + other.power)

    def reciprocal(self) -> Monomial:
        """Star of the coordinate: the monomial inverse, or 0 on 0."""
        if self.coeff == 0:
            return Monomial(ZERO, 0)
        return Monomial(1 / self.coeff, -self.power)

    def at(self, n: int) -> Fraction:
        return self.coeff * Fraction(n) ** self.power

    def limit(self):
        """Order limit as n -> inf: the constant, inf, or 0."""
        if self.coeff == 0 or self.power < 0:
            return ZERO
        if self.power == 0:
            return self.coeff
        if self.coeff < 0:
            raise PreconditionViolated("coordinate diverges to -inf")
        return INF


Tail = tuple[Monomial, ...]


@dataclass(frozen=True, slots=True)
class TruncationSeq:
    """
    The increasing sequence x_n = x ^ n^power e (n >= 1) with order limit x.

    Parameters
    ----------
    x : Element
        Cone element, the limit.
    power : int, optional
        Growth exponent of the truncation level, by default 1.
    """

    x: Element
    power: int = 1

    def __post_init__(self):
        if not self.x.is_cone():
            raise PreconditionViolated("truncation generators need a cone limit")
        if self.power < 1:
            raise PreconditionViolated(f"power must be >= 1, got {self.power}")

    def term(self, n: int) -> Element:
        if n < 1:
            raise PreconditionViolated("truncation index starts at 1")
        return meet(self.x, Element.constant(self.x.dim, Fraction(n) ** self.power))

    def settle_index(self) -> int:
        """Smallest n >= 1 from which every finite coordinate is reached."""
        n = 1
        for c in self.x.coords:
            if c is INF:
                continue
            while Fraction(n) ** self.power < c:
                n += 1
        return n

    def tail(self) -> Tail:
        return tuple(
            Monomial(Fraction(1), self.power) if c is INF else Monomial(c, 0)
            for c in self.x.coords
        )

    def limit(self) -> Element:
        return self.x


def mul_tails(a: Tail, b: Tail) -> Tail:
    return tuple(p * q for p, q in zip(a, b))


def star_tail(a: Tail) -> Tail:
    return tuple(p.reciprocal() for p in a)


def tail_limit(a: Tail) -> Element:
    return Element(tuple(p.limit() for p in a))


def tail_matches(a: Tail, values: Element, n: int) -> bool:
    """Check that the monomial forms reproduce the computed term at index n."""
    return all(p.at(n) == v for p, v in zip(a, values.coords))


def converges_in_order(
    gens: Sequence[TruncationSeq],
    term_fn: Callable[..., Element],
    tail_fn: Callable[..., Tail],
    expected: Element,
) -> bool:
    """
    Decide ``term_fn(x1_n, x2_n, ...) -> expected`` in order, exactly.

    `term_fn` builds the n-th derived term from the generator terms and
    `tail_fn` the same expression on their monomial tails. The monomials are
    first checked against the computed terms at two indices past the common
    settling index, then the limit is read from the exponents.
    """
    settle = max(g.settle_index() for g in gens)
    tail = tail_fn(*(g.tail() for g in gens))
    for n in (settle, settle + 1):
        if not tail_matches(tail, term_fn(*(g.term(n) for g in gens)), n):
            return False
    return tail_limit(tail) == expected
