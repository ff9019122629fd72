from __future__ import annotations

from rieszsup.atoms import (
    INF,
    BandProjection,
    Element,
    add,
    band_of,
    infinity_of,
    join,
    meet,
    meet_bands,
    neg_part,
    pi,
    pi_approx,
    pi_settles_at,
    pos_part,
    sub,
)
from rieszsup.calculus import (
    band_liminf,
    band_limsup,
    band_tail_join,
    liminf,
    limsup,
    tail_inf,
    tail_sup,
)
from rieszsup.workflows.generators import InstanceBuilder

from .base import LemmaSuite, TrialResult, outcome

__doc__ = """
Suites for band projections, the infinity elements of bands and the lattice
identities the other suites lean on.
"""


def check_band_infinities(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    b1, b2 = gen.band(d), gen.band(d)
    bands = gen.band_seq(d)
    infinities = bands.map(infinity_of)
    return outcome(
        {"b1": b1, "b2": b2, "bands": bands},
        meet=infinity_of(b1 & b2) == meet(infinity_of(b1), infinity_of(b2)),
        join=infinity_of(b1 | b2) == join(infinity_of(b1), infinity_of(b2)),
        injective=(infinity_of(b1) == infinity_of(b2)) == (b1 == b2),
        empty=infinity_of(BandProjection.empty(d)).is_zero(),
        full=infinity_of(BandProjection.full(d)) == Element.constant(d, INF),
        limsup=limsup(infinities) == infinity_of(band_limsup(bands)),
        liminf=liminf(infinities) == infinity_of(band_liminf(bands)),
    )


def check_band_limits(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    bands = gen.band_seq(d)
    x = bands.zip_with(gen.periodic(d), lambda b, v: b.apply(v))
    every = meet_bands(bands.tail_terms(0), d)
    return outcome(
        {"bands": bands, "x": x},
        sup=band_of(tail_sup(x, 0)) <= band_tail_join(bands, 0),
        inf=band_of(tail_inf(x, 0)) <= every,
        limsup=band_of(limsup(x)) <= band_limsup(bands),
        liminf=band_of(liminf(x)) <= band_liminf(bands),
    )


def check_lattice(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    a, b = gen.element(d), gen.element(d)
    up, down = pos_part(a), neg_part(a)
    return outcome(
        {"a": a, "b": b},
        meet_plus_join=add(meet(a, b), join(a, b)) == add(a, b),
        parts=sub(up, down) == a,
        parts_disjoint=not band_of(up) & band_of(down),
        absorption=join(a, meet(a, b)) == a and meet(a, join(a, b)) == a,
    )


def check_principal_projection(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x, a = gen.cone(d), gen.cone(d)
    n = pi_settles_at(x, a)
    finite = BandProjection.from_atoms(
        (i for i, c in enumerate(a) if c is not INF), d
    )
    return outcome(
        {"x": x, "a": a},
        band_projection=pi(x, a) == band_of(x).apply(a),
        approximants_increase=pi_approx(x, a, n) <= pi_approx(x, a, n + 1),
        settles=finite.apply(pi_approx(x, a, n)) == finite.apply(pi(x, a)),
    )


BAND_INFINITY_SUITE = LemmaSuite(
    "YY2-B",
    "B -> inf_B is an injective lattice map commuting with limsup and liminf",
    check_band_infinities,
)
BAND_LIMITS_SUITE = LemmaSuite(
    "X1",
    "x_n in B_n puts sup, inf, limsup and liminf in the matching band limits",
    check_band_limits,
)
LATTICE_SUITE = LemmaSuite(
    "lattice",
    "a ^ b + a v b = a + b, x = x+ - x- with disjoint parts, absorption",
    check_lattice,
)
PRINCIPAL_PROJECTION_SUITE = LemmaSuite(
    "pi",
    "sup_n (a ^ n x) is the band projection of a onto the band of x",
    check_principal_projection,
)
