from __future__ import annotations

from fractions import Fraction

from rieszsup.atoms import leq
from rieszsup.bounds import (
    K,
    R,
    S,
    borel_cantelli,
    corollary_m10,
    k_squared_below_s,
    m5_limit_check,
    split_identity_holds,
    tail_independence_check,
    theorem_m7,
)
from rieszsup.calculus import infinite_part
from rieszsup.workflows.generators import InstanceBuilder

from .base import LemmaSuite, TrialResult, outcome

__doc__ = """
Suites for the K, S and R quantities, their limits, the lower bound for the
conditional probability of limsup Q_n and the Borel-Cantelli experiment.
"""


def _checkpoints(gen: InstanceBuilder) -> tuple[int, ...]:
    return tuple(sorted({gen.integer(1, 12) for _ in range(gen.integer(1, 4))}))


def check_quantities(gen: InstanceBuilder) -> TrialResult:
    t = gen.cond_exp(gen.dim())
    seq = gen.weighted_seq(t)
    n = gen.integer(1, 12)
    q = gen.integer(1, n)
    p = gen.integer(1, q)
    return outcome(
        {"sequence": seq, "p": p, "q": q, "n": n},
        k_squared_below_s=k_squared_below_s(seq, q, n)
        and k_squared_below_s(seq, q, None),
        split_identity=split_identity_holds(seq, p, q, n),
        limit=m5_limit_check(seq, q, p, q + 3 * seq.period).holds,
    )


def check_infinite_parts(gen: InstanceBuilder) -> TrialResult:
    t = gen.cond_exp(gen.dim())
    seq = gen.weighted_seq(t)
    q = gen.integer(2, seq.offset + 2 * seq.period + 1)
    r, k, s = (infinite_part(f(seq, 1, None)) for f in (R, K, S))
    return outcome(
        {"sequence": seq, "q": q},
        ordered=leq(r, k) and leq(k, s),
        k_tail=infinite_part(K(seq, q, None)) == k,
        r_tail=infinite_part(R(seq, q, None)) == r,
        tail_independent=tail_independence_check(seq, (1, q)).holds,
    )


def check_bound(gen: InstanceBuilder) -> TrialResult:
    t = gen.cond_exp(gen.dim())
    seq = gen.weighted_seq(t)
    qs = gen.band_seq(t.dim)
    checkpoints = _checkpoints(gen)
    report = theorem_m7(seq, checkpoints)
    corollary = corollary_m10(t, qs, checkpoints)
    block_constant = [report.lhs, report.rhs_limsup]
    for c in report.certificates:
        block_constant += [c.left, c.right]
    return outcome(
        {"sequence": seq, "events": qs, "checkpoints": checkpoints},
        verdict=report.verdict,
        block_constant=all(t.is_block_constant(x) for x in block_constant),
        projection_commutes=t.commutes_with(report.projection),
        corollary=corollary.verdict,
        displayed_form=corollary.corollary_matches,
    )


def check_borel_cantelli(gen: InstanceBuilder) -> TrialResult:
    depth = gen.integer(1, 6)
    mixed = borel_cantelli(gen.probabilities(depth))
    ps = gen.probabilities(depth, constant=True)
    constant = borel_cantelli(ps)
    p = ps[0]
    return outcome(
        {"probabilities": list(mixed.probabilities), "constant": p, "depth": depth},
        verdict=mixed.verdict and constant.verdict,
        nondecreasing=constant.ratios_nondecreasing,
        closed_form=constant.certificate == depth * p / ((depth - 1) * p + 1),
        union=constant.union_value == 1 - (1 - p) ** depth,
        below_one=Fraction(0) < constant.certificate <= 1,
    )


QUANTITIES_SUITE = LemmaSuite(
    "M5",
    "K_{q,n}^2 <= S_{q,n}, the splitting of S_{p,n} and the limit of "
    "S*_{q,n} S_{p,n}",
    check_quantities,
)
INFINITE_PARTS_SUITE = LemmaSuite(
    "M6",
    "R^inf <= K^inf <= S^inf, independent of the starting index",
    check_infinite_parts,
)
BOUND_SUITE = LemmaSuite(
    "M7-cert",
    "T P limsup Q_{v_n} e >= limsup P S*_{1,n} K_{1,n}^2 with finite-n "
    "certificates, and the (T q_n)* weighting",
    check_bound,
)
BOREL_CANTELLI_SUITE = LemmaSuite(
    "BC",
    "pairwise independent events: the certificate stays below the union value",
    check_borel_cantelli,
)
