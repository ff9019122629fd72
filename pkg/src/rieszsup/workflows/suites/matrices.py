from __future__ import annotations

from rieszsup.atoms import BandProjection, Element, join, join_bands, leq, mul
from rieszsup.bounds import S, WeightedEventSeq
from rieszsup.calculus import PeriodicSeq
from rieszsup.conditional import (
    XMatrix,
    block_gamma_check,
    det,
    gamma,
    gram_matrix,
    hom_evaluate,
    is_psd,
    quadratic_form,
)
from rieszsup.workflows.generators import InstanceBuilder

from .base import LemmaSuite, TrialResult, outcome

__doc__ = """
Suites for the conditional expectation and for matrices over X: positive
semi-definiteness of weighted Gram matrices, their block compressions and
the Cauchy-Schwarz type inequality on block sums.
"""


def _weighted_gram(
    gen: InstanceBuilder, n: int
) -> tuple[XMatrix, dict[str, object]]:
    t = gen.cond_exp(gen.dim())
    vs = [gen.block_constant(t) for _ in range(n)]
    qs = [gen.band(t.dim) for _ in range(n)]
    m = XMatrix.from_rows(
        [
            [mul(mul(vi, vj), t.apply((qi & qj).unit())) for vj, qj in zip(vs, qs)]
            for vi, qi in zip(vs, qs)
        ]
    )
    return m, {"cond_exp": t, "weights": vs, "events": qs}


def check_psd(gen: InstanceBuilder) -> TrialResult:
    m, instance = _weighted_gram(gen, gen.integer(1, 4))
    n, _ = m.shape
    xs = [gen.finite(m.dim) for _ in range(n)]
    a, b = gen.finite(m.dim), gen.finite(m.dim)
    atom = gen.integer(0, m.dim - 1)
    return outcome(
        instance | {"xs": xs, "a": a, "b": b, "atom": atom},
        psd=is_psd(m),
        quadratic_form=quadratic_form(m, xs).is_cone(),
        hom_product=hom_evaluate(atom, mul(a, b))
        == hom_evaluate(atom, a) * hom_evaluate(atom, b),
        hom_join=hom_evaluate(atom, join(a, b))
        == max(hom_evaluate(atom, a), hom_evaluate(atom, b)),
    )


def _contiguous_blocks(gen: InstanceBuilder, n: int) -> list[list[int]]:
    cuts: set[int] = set()
    if n > 1:
        cuts = {gen.integer(1, n - 1) for _ in range(gen.integer(0, 2))}
    bounds = [0, *sorted(cuts), n]
    return [list(range(lo, hi)) for lo, hi in zip(bounds, bounds[1:])]


def check_compression(gen: InstanceBuilder) -> TrialResult:
    m, instance = _weighted_gram(gen, gen.integer(1, 4))
    n, _ = m.shape
    blocks = _contiguous_blocks(gen, n)
    c = m.compress(blocks, blocks)
    return outcome(
        instance | {"blocks": blocks},
        compressed_psd=is_psd(c),
        determinant=det(m).is_cone() and det(c).is_cone(),
    )


def check_block_sums(gen: InstanceBuilder) -> TrialResult:
    m, instance = _weighted_gram(gen, gen.integer(2, 4))
    n, _ = m.shape
    split = gen.integer(1, n - 1)
    return outcome(instance | {"split": split}, block_sums=block_gamma_check(m, split))


def check_gram(gen: InstanceBuilder) -> TrialResult:
    t = gen.cond_exp(gen.dim())
    qs = tuple(gen.band(t.dim) for _ in range(gen.integer(1, 4)))
    g = gram_matrix(t, qs)
    seq = WeightedEventSeq.unit_weights(
        t, PeriodicSeq(qs, (BandProjection.empty(t.dim),))
    )
    return outcome(
        {"cond_exp": t, "events": qs},
        psd=is_psd(g),
        entry_sum=gamma(g) == S(seq, 1, len(qs)),
    )


def check_cond_exp(gen: InstanceBuilder) -> TrialResult:
    t = gen.cond_exp(gen.dim())
    d = t.dim
    x, c = gen.finite(d), gen.cone(d)
    u = gen.block_constant(t, cone=False)
    picked = [b for b in t.partition if gen.integer(0, 1)]
    band = join_bands((BandProjection.from_atoms(b, d) for b in picked), d)
    other = gen.band(d)
    tx = t.apply(x)
    commutes = not t.commutes_with(other) or other.apply(tx) == t.apply(
        other.apply(x)
    )
    return outcome(
        {"cond_exp": t, "x": x, "c": c, "u": u, "band": band, "other": other},
        unit=t.apply(Element.unit(d)) == Element.unit(d),
        idempotent=t.apply(tx) == tx,
        positive=t.apply(c).is_cone(),
        strictly_positive=c.is_zero() or not t.apply(c).is_zero(),
        averaging=t.apply(mul(u, x)) == mul(u, tx),
        expectation=t.space.expectation(tx) == t.space.expectation(x),
        union_of_blocks=t.commutes_with(band)
        and band.apply(tx) == t.apply(band.apply(x)),
        commuting_bands=commutes,
        range=t.is_block_constant(tx) and leq(t.apply(c), t.apply(c + c)),
    )


PSD_SUITE = LemmaSuite(
    "M1",
    "weighted Gram matrices (v_i v_j T Q_i Q_j e) are positive semi-definite",
    check_psd,
)
COMPRESSION_SUITE = LemmaSuite(
    "M2",
    "summing a PSD matrix over contiguous blocks keeps it PSD",
    check_compression,
)
BLOCK_SUMS_SUITE = LemmaSuite(
    "M3",
    "Gamma(C)^2 <= Gamma(A) Gamma(B) for a PSD block matrix [[A, C], [C^t, B]]",
    check_block_sums,
)
GRAM_SUITE = LemmaSuite(
    "M4",
    "(T Q_i Q_j e) is PSD and its entry sum is S_{1,n}",
    check_gram,
)
COND_EXP_SUITE = LemmaSuite(
    "cond-exp",
    "T fixes e, is idempotent, strictly positive, averaging and commutes with "
    "unions of blocks",
    check_cond_exp,
)
