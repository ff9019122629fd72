from __future__ import annotations

from rieszsup.atoms import (
    INF,
    Element,
    add,
    band_of,
    infinity_of,
    join_all,
    leq,
    meet_all,
    mul,
)
from rieszsup.calculus import (
    FiniteDirectedGrid,
    PeriodicSeq,
    finite_part,
    infinite_part,
    liminf,
    limsup,
    order_limit,
    partial_sum,
    series_sum,
    tail_inf,
    tail_sup,
)
from rieszsup.workflows.generators import InstanceBuilder

from .base import LemmaSuite, TrialResult, outcome

__doc__ = """
Suites for order limits of sequences and nets: sums, translates and products
of nets, infinite multipliers, and tails of nonnegative series.

Sequences are eventually periodic and nets are finite directed grids, so
every side of every claim is computed exactly.
"""


def _net_limits(s: PeriodicSeq[Element]) -> tuple[Element, ...]:
    return tail_sup(s, 0), tail_inf(s, 0), limsup(s), liminf(s)


def _grid_limits(g: FiniteDirectedGrid) -> tuple[Element, ...]:
    return g.sup(), g.inf(), g.limsup(), g.liminf()


def _sums(a: tuple[Element, ...], b: tuple[Element, ...]) -> tuple[Element, ...]:
    return tuple(add(x, y) for x, y in zip(a, b))


def check_disjoint_sums(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    band = gen.band(d)
    other = band.complement()
    x = gen.periodic(d).map(band.apply)
    y = gen.periodic(d).map(other.apply)
    m = gen.integer(1, 2)
    gx = gen.grid(d, m).map(band.apply)
    gy = gen.grid(d, m).map(other.apply)
    return outcome(
        {"band": band, "x": x, "y": y, "grid_x": gx, "grid_y": gy},
        sequence_limits=_net_limits(x.zip_with(y, add))
        == _sums(_net_limits(x), _net_limits(y)),
        grid_limits=_grid_limits(gx.zip_with(gy, add))
        == _sums(_grid_limits(gx), _grid_limits(gy)),
    )


def _decreasing_seq(gen: InstanceBuilder, d: int) -> PeriodicSeq[Element]:
    terms = [gen.element(d)]
    for _ in range(gen.integer(0, 3)):
        terms.append(terms[-1] - gen.finite(d, cone=True))
    return PeriodicSeq(tuple(terms[:-1]), (terms[-1],))


def check_decreasing_sums(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    m = gen.integer(1, 2)
    gx, gy = gen.decreasing_grid(d, m), gen.decreasing_grid(d, m)
    x, y = _decreasing_seq(gen, d), _decreasing_seq(gen, d)
    return outcome(
        {"grid_x": gx, "grid_y": gy, "x": x, "y": y},
        grids_decreasing=gx.is_decreasing() and gy.is_decreasing(),
        grid_inf=gx.zip_with(gy, add).inf() == add(gx.inf(), gy.inf()),
        sequence_inf=tail_inf(x.zip_with(y, add), 0)
        == add(tail_inf(x, 0), tail_inf(y, 0)),
    )


def check_translates(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    y = gen.element(d)
    x = gen.periodic(d, cone=False)
    g = gen.grid(d, cone=False)

    def shift(t: Element) -> Element:
        return add(y, t)

    return outcome(
        {"y": y, "x": x, "grid": g},
        sequence_limits=_net_limits(x.map(shift))
        == tuple(shift(v) for v in _net_limits(x)),
        grid_limits=_grid_limits(g.map(shift))
        == tuple(shift(v) for v in _grid_limits(g)),
    )


def check_liminf_of_sums(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x, y = gen.periodic(d, cone=False), gen.periodic(d, cone=False)
    z = gen.convergent(d, cone=False)
    s = x.zip_with(y, add)
    sz = x.zip_with(z, add)
    lim = order_limit(z)
    return outcome(
        {"x": x, "y": y, "z": z},
        lower=leq(add(liminf(x), liminf(y)), liminf(s)),
        middle=leq(liminf(s), add(liminf(x), limsup(y))),
        upper=leq(limsup(s), add(limsup(x), limsup(y))),
        with_limit=liminf(sz) == add(liminf(x), lim)
        and limsup(sz) == add(limsup(x), lim),
    )


def check_infinite_multipliers(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x = gen.periodic(d)
    low, upper, lower = tail_inf(x, 0), limsup(x), liminf(x)

    def multiplier(band) -> Element:
        return add(gen.finite(d, cone=True), infinity_of(gen.sub_band(band)))

    u_inf = multiplier(band_of(low))
    u_sup = multiplier(band_of(upper))
    u_lim = multiplier(band_of(lower))
    u = gen.cone(d)

    def times(v: Element) -> PeriodicSeq[Element]:
        return x.map(lambda t: mul(v, t))

    return outcome(
        {"x": x, "u": u, "u_inf": u_inf, "u_sup": u_sup, "u_lim": u_lim},
        inf=tail_inf(times(u_inf), 0) == mul(u_inf, low),
        limsup=limsup(times(u_sup)) == mul(u_sup, upper),
        liminf=liminf(times(u_lim)) == mul(u_lim, lower),
        inf_bound=leq(
            tail_inf(times(u), 0),
            add(infinite_part(u), mul(finite_part(u), low)),
        ),
        sup=tail_sup(times(u), 0) == mul(u, tail_sup(x, 0)),
    )


def check_product_limits(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x, y = gen.periodic(d), gen.periodic(d)
    p = x.zip_with(y, mul)
    bound = mul(limsup(x), liminf(y))
    return outcome(
        {"x": x, "y": y},
        limsup_above=leq(bound, limsup(p)),
        liminf_below=leq(liminf(p), bound),
    )


def check_finite_multipliers(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    u = gen.finite(d, cone=True)
    x = gen.periodic(d, cone=False, inf=False)
    g = gen.grid(d, cone=False, inf=False)
    ux, ug = x.map(lambda t: mul(u, t)), g.map(lambda t: mul(u, t))
    return outcome(
        {"u": u, "x": x, "grid": g},
        sequence_inf=tail_inf(ux, 0) == mul(u, tail_inf(x, 0)),
        sequence_sup=tail_sup(ux, 0) == mul(u, tail_sup(x, 0)),
        grid_inf=ug.inf() == mul(u, g.inf()),
        grid_sup=ug.sup() == mul(u, g.sup()),
    )


def check_product_chain(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x = gen.periodic(d, inf=False)
    y = gen.periodic(d, inf=False)
    p = x.zip_with(y, mul)
    chain = [
        mul(liminf(x), liminf(y)),
        liminf(p),
        mul(liminf(x), limsup(y)),
        limsup(p),
        mul(limsup(x), limsup(y)),
    ]
    return outcome(
        {"x": x, "y": y},
        chain=all(leq(a, b) for a, b in zip(chain, chain[1:])),
    )


def check_convergent_factor(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x, y = gen.convergent(d), gen.periodic(d)
    lim = order_limit(x)
    p = x.zip_with(y, mul)
    return outcome(
        {"x": x, "y": y},
        limsup=limsup(p) == mul(lim, limsup(y)),
        liminf=liminf(p) == mul(lim, liminf(y)),
    )


def check_series_tails(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    s = gen.periodic(d, inf=False)
    tails = [series_sum(s, n) for n in range(s.offset + 2)]
    return outcome(
        {"x": s},
        tails_decrease=all(leq(b, a) for a, b in zip(tails, tails[1:])),
        infinite_parts=infinite_part(tails[0]) == infinite_part(meet_all(tails)),
    )


def check_window_oracle(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    s = gen.periodic(d)
    p, stop = s.period, s.offset + 3 * s.period
    beta = gen.integer(0, s.offset + p)
    start = gen.integer(0, s.offset + p)
    window = s.window(beta, stop)
    sums = [partial_sum(s, start, max(start, s.offset) + k * p) for k in (1, 3)]
    expected = Element(tuple(a if a == b else INF for a, b in zip(*sums)))
    return outcome(
        {"x": s, "beta": beta, "start": start},
        tail_sup=tail_sup(s, beta) == join_all(window),
        tail_inf=tail_inf(s, beta) == meet_all(window),
        limsup=limsup(s)
        == meet_all(join_all(s.window(b, stop)) for b in range(stop - p)),
        liminf=liminf(s)
        == join_all(meet_all(s.window(b, stop)) for b in range(stop - p)),
        series=series_sum(s, start) == expected,
    )


DISJOINT_SUMS_SUITE = LemmaSuite(
    "YY2-A",
    "sup, inf, limsup and liminf are additive on nets with disjoint suprema",
    check_disjoint_sums,
)
DECREASING_SUMS_SUITE = LemmaSuite(
    "YY2-Q",
    "inf (x + y) = inf x + inf y for decreasing nets",
    check_decreasing_sums,
)
TRANSLATES_SUITE = LemmaSuite(
    "YY2-k",
    "sup, inf, limsup and liminf commute with a fixed translate y + x_a",
    check_translates,
)
SUM_LIMITS_SUITE = LemmaSuite(
    "YY2-T",
    "liminf x + liminf y <= liminf (x + y) <= liminf x + limsup y, "
    "with equality against a convergent summand",
    check_liminf_of_sums,
)
INFINITE_MULTIPLIER_SUITE = LemmaSuite(
    "YY2-E",
    "inf, limsup and liminf of u x_n when u is infinite only where the limit "
    "is positive",
    check_infinite_multipliers,
)
PRODUCT_LIMITS_SUITE = LemmaSuite(
    "X4",
    "liminf (xy) <= limsup x liminf y <= limsup (xy)",
    check_product_limits,
)
FINITE_MULTIPLIER_SUITE = LemmaSuite(
    "L1",
    "a finite multiplier u >= 0 commutes with inf and sup of finite nets",
    check_finite_multipliers,
)
PRODUCT_CHAIN_SUITE = LemmaSuite(
    "YY2-t",
    "liminf x liminf y <= liminf xy <= liminf x limsup y <= limsup xy "
    "<= limsup x limsup y",
    check_product_chain,
)
CONVERGENT_FACTOR_SUITE = LemmaSuite(
    "YY3-a",
    "x_n -> x in order implies limsup x_n y_n = x limsup y_n, and for liminf",
    check_convergent_factor,
)
SERIES_TAILS_SUITE = LemmaSuite(
    "YY2-g",
    "the infinite part of a series equals the infinite part of its tail sums",
    check_series_tails,
)
WINDOW_ORACLE_SUITE = LemmaSuite(
    "oracle",
    "exact tail bounds, limits and series agree with finite-window evaluation",
    check_window_oracle,
)
