from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from rieszsup.atoms import INF, BandProjection, Element, ExtValue, mul
from rieszsup.errors import DimensionMismatch, IndexOutOfRange, PreconditionViolated

__doc__ = """
Conditional expectations on finite probability spaces.

A `CondExp` averages an element over the blocks of a partition of the atoms,
weighting each atom by its probability. Its range is the set of
block-constant elements; it fixes the unit, is positive, idempotent and
strictly positive, which makes (X, e, T) a conditional Riesz triple.
"""


@dataclass(frozen=True, slots=True)
class ProbSpace:
    """
    Finite probability space with one positive rational weight per atom.

    Parameters
    ----------
    weights : tuple[Fraction, ...]
        Atom probabilities; all positive, summing to exactly 1.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(Fraction(w) for w in self.weights)
        if not weights:
            raise ValueError("a probability space needs at least one atom")
        bad = [str(w) for w in weights if w <= 0]
        if bad:
            raise ValueError(f"weights must be positive, got {', '.join(bad)}")
        total = sum(weights, Fraction(0))
        if total != 1:
            raise ValueError(f"weights must sum to 1, got {total}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, dim: int) -> ProbSpace:
        return cls((Fraction(1, dim),) * dim)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def expectation(self, x: Element) -> ExtValue:
        """E[x], inf if x is inf on some atom."""
        if x.dim != self.dim:
            raise DimensionMismatch(self.dim, x.dim, op="expectation")
        if not x.is_finite():
            return INF
        return sum((w * c for w, c in zip(self.weights, x.coords)), Fraction(0))


@dataclass(frozen=True, slots=True)
class CondExp:
    """
    Conditional expectation onto the partition generated sub-algebra.

    Parameters
    ----------
    space : ProbSpace
        The underlying weights.
    partition : tuple[tuple[int, ...], ...]
        Disjoint nonempty blocks covering every atom.
    """

    space: ProbSpace
    partition: tuple[tuple[int, ...], ...]
    masses: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.partition)
        seen: list[int] = [i for b in blocks for i in b]
        if any(not b for b in blocks):
            raise ValueError("partition blocks must be nonempty")
        if len(seen) != len(set(seen)):
            raise ValueError("partition blocks must be disjoint")
        if sorted(seen) != list(range(self.space.dim)):
            raise ValueError(
                f"partition must cover atoms 0..{self.space.dim - 1} exactly"
            )
        object.__setattr__(self, "partition", blocks)
        w = self.space.weights
        object.__setattr__(
            self, "masses", tuple(sum((w[i] for i in b), Fraction(0)) for b in blocks)
        )

    @classmethod
    def trivial(cls, space: ProbSpace) -> CondExp:
        """T = E[.] e, the coarsest conditional expectation."""
        return cls(space, (tuple(range(space.dim)),))

    @classmethod
    def identity(cls, space: ProbSpace) -> CondExp:
        return cls(space, tuple((i,) for i in range(space.dim)))

    @property
    def dim(self) -> int:
        return self.space.dim

    def block_of(self, atom: int) -> int:
        for k, block in enumerate(self.partition):
            if atom in block:
                return k
        raise IndexOutOfRange(f"atom {atom} outside 0..{self.dim - 1}")

    def apply(self, x: Element, *, finite_only: bool = False) -> Element:
        """
        Blockwise weighted average of x.

        A block containing an infinite coordinate maps to inf on the whole
        block, unless ``finite_only`` is set, in which case such input is
        refused.

        Raises
        ------
        DimensionMismatch
            If x has another number of atoms.
        PreconditionViolated
            In finite-only mode, for x with an infinite coordinate.
        """
        if x.dim != self.dim:
            raise DimensionMismatch(self.dim, x.dim, op="apply_T")
        if finite_only and not x.is_finite():
            raise PreconditionViolated("finite-only mode refuses infinite input")
        w = self.space.weights
        coords: list[ExtValue] = [Fraction(0)] * self.dim
        for block, mass in zip(self.partition, self.masses):
            if any(x[i] is INF for i in block):
                value: ExtValue = INF
            else:
                value = sum((w[i] * x[i] for i in block if x[i]), Fraction(0)) / mass
            for i in block:
                coords[i] = value
        return Element(tuple(coords))

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def is_block_constant(self, x: Element) -> bool:
        """True iff x lies in the range R(T) (or its sup-completion)."""
        return all(len({x[i] for i in block}) == 1 for block in self.partition)

    def range_basis(self) -> list[Element]:
        """Block indicators; R(T) is their linear span."""
        return [
            BandProjection.from_atoms(block, self.dim).unit()
            for block in self.partition
        ]

    def commutes_with(self, band: BandProjection) -> bool:
        """P_B T = T P_B, which holds iff B is a union of blocks."""
        return all(
            all(i in band for i in block) or not any(i in band for i in block)
            for block in self.partition
        )

    def is_independent(self, p: BandProjection, q: BandProjection) -> bool:
        """T(P e . Q e) == T P e . T Q e, exactly."""
        return self.apply((p & q).unit()) == mul(
            self.apply(p.unit()), self.apply(q.unit())
        )


def apply_T(t: CondExp, x: Element) -> Element:
    return t.apply(x)


def is_T_independent(t: CondExp, p: BandProjection, q: BandProjection) -> bool:
    return t.is_independent(p, q)


def pairwise_independent(t: CondExp, bands: Sequence[BandProjection]) -> bool:
    return all(
        t.is_independent(bands[i], bands[j])
        for i in range(len(bands))
        for j in range(i + 1, len(bands))
    )


def hom_evaluate(atom: int, x: Element) -> ExtValue:
    """
    Evaluate x at an atom, a Riesz and algebra homomorphism of the model.

    Raises
    ------
    IndexOutOfRange
        If `atom` is not an atom of x's space.
    """
    if not 0 <= atom < x.dim:
        raise IndexOutOfRange(f"atom {atom} outside 0..{x.dim - 1}")
    return x[atom]
