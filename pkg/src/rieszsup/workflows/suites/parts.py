from __future__ import annotations

from fractions import Fraction

from rieszsup.atoms import (
    Element,
    abs_part,
    add,
    band_of,
    infinity_of,
    int_power,
    join,
    leq,
    meet,
    mul,
    neg_part,
    pos_part,
    scale,
    sub,
)
from rieszsup.calculus import (
    TruncationSeq,
    converges_in_order,
    decompose,
    finite_part,
    infinite_part,
    mul_decompose,
    mul_tails,
    star,
    star_tail,
)
from rieszsup.workflows.generators import InstanceBuilder

from .base import LemmaSuite, TrialResult, outcome

__doc__ = """
Suites for the finite/infinite decomposition and the star map.
"""

MAX_MULTIPLE = 100


def check_parts(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x, y = gen.cone(d), gen.cone(d)
    xf, xi = finite_part(x), infinite_part(x)
    yf, yi = finite_part(y), infinite_part(y)
    y_disjoint = band_of(x).complement().apply(y)
    s = add(x, y_disjoint)
    sup, inf, prod = join(x, y), meet(x, y), mul(x, y)
    pd_x, pd_y = band_of(xi).complement(), band_of(yi).complement()

    w = gen.element(d)
    a = gen.finite(d, cone=True)
    above = add(w, gen.cone(d))
    shifted = add(w, a)
    shifted_f, shifted_i = decompose(shifted)
    in_band = band_of(xi).apply(gen.finite(d, cone=True))
    t = gen.cond_exp(d)
    u = gen.block_constant(t, inf=True)
    plus = gen.cone(d)
    minus = band_of(plus).complement().apply(gen.finite(d, cone=True))
    signed = sub(plus, minus)
    return outcome(
        {
            "x": x,
            "y": y,
            "w": w,
            "a": a,
            "above": above,
            "in_band": in_band,
            "cond_exp": t,
            "u": u,
            "plus": plus,
            "minus": minus,
        },
        infinite_part_monotone=leq(infinite_part(w), infinite_part(above)),
        finite_shift_below=leq(finite_part(w), shifted_f),
        finite_shift=finite_part(w)
        == sub(shifted_f, band_of(shifted_i).complement().apply(a)),
        infinite_absorbs=all(
            leq(scale(n, in_band), xi) for n in range(1, MAX_MULTIPLE + 1)
        ),
        block_constant_parts=t.is_block_constant(finite_part(u))
        and t.is_block_constant(infinite_part(u)),
        parts_unique=(pos_part(signed), neg_part(signed)) == (plus, minus),
        sum_infinite=infinite_part(add(x, y)) == add(xi, yi),
        sum_finite=leq(finite_part(add(x, y)), add(xf, yf)),
        sum_finite_disjoint=finite_part(s) == add(xf, finite_part(y_disjoint)),
        join_infinite=infinite_part(sup) == join(xi, yi) == add(xi, yi),
        join_finite=finite_part(sup) == join(pd_y.apply(xf), pd_x.apply(yf)),
        meet_infinite=infinite_part(inf) == meet(xi, yi),
        meet_finite=finite_part(inf)
        == add(add(meet(xf, yf), meet(xf, yi)), meet(xi, yf)),
        product_finite=finite_part(prod) == mul(xf, yf),
        product_infinite=infinite_part(prod)
        == add(add(mul(xf, yi), mul(xi, yf)), mul(xi, yi)),
    )


def check_star(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x = gen.element(d)
    y = gen.element(d)
    band = gen.band(d)
    y_disjoint = band_of(x).complement().apply(y)
    a, b = gen.cone(d), gen.cone(d)
    u, v = gen.finite(d), gen.finite(d)
    p = gen.integer(1, 3)
    sub_band = gen.sub_band(band_of(a))
    above = add(a, b)
    weak_unit = gen.positive(d)
    signed_unit = mul(weak_unit, gen.sign_pattern(d))
    return outcome(
        {
            "x": x,
            "y": y,
            "band": band,
            "a": a,
            "b": b,
            "u": u,
            "v": v,
            "p": p,
            "weak_unit": signed_unit,
        },
        weak_unit_inverse=mul(signed_unit, star(signed_unit)) == Element.unit(d),
        star_of_zero=star(Element.zeros(d)).is_zero(),
        star_of_infinity=star(infinity_of(band)).is_zero(),
        star_homogeneous=star(scale(3, x)) == scale(Fraction(1, 3), star(x)),
        star_disjoint=not band_of(star(x)) & band_of(star(y_disjoint)),
        star_additive=star(add(x, y_disjoint)) == add(star(x), star(y_disjoint)),
        star_of_modulus=star(abs_part(x)) == add(star(pos_part(x)), star(neg_part(x))),
        star_commutes_with_bands=star(band.apply(x)) == band.apply(star(x)),
        star_multiplicative_cone=star(mul(a, b)) == mul(star(a), star(b)),
        star_multiplicative_finite=star(mul(u, v)) == mul(star(u), star(v)),
        star_of_power=star(int_power(a, p)) == int_power(star(a), p),
        star_antitone=leq(sub_band.apply(star(above)), sub_band.apply(star(a))),
        star_below_inverse=leq(band_of(a).apply(star(above)), star(a)),
        unit_of_finite_part=mul(x, star(x)) == band_of(finite_part(x)).unit(),
    )


def check_mul_decompose(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    y, z, c = gen.cone(d), gen.cone(d), gen.cone(d)
    x = meet(mul(y, z), c)
    a, b = mul_decompose(x, y, z)
    return outcome(
        {"x": x, "y": y, "z": z},
        factors=mul(a, b) == x,
        a_below_y=a.is_cone() and leq(a, y),
        b_below_z=b.is_cone() and leq(b, z),
    )


def check_star_continuity(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    gen_x = gen.truncation(d)
    increasing = all(
        leq(gen_x.term(n), gen_x.term(n + 1))
        for n in range(1, gen_x.settle_index() + 1)
    )
    return outcome(
        {"x": gen_x},
        increasing=increasing,
        star_converges=converges_in_order(
            [gen_x], star, star_tail, star(gen_x.limit())
        ),
    )


def check_ratio_continuity(gen: InstanceBuilder) -> TrialResult:
    d = gen.dim()
    x = gen.cone(d)
    y = add(int_power(x, 2), gen.cone(d))
    gen_x, gen_y = TruncationSeq(x, 1), TruncationSeq(y, 2)
    settle = max(gen_x.settle_index(), gen_y.settle_index())
    dominated = all(
        leq(int_power(gen_x.term(n), 2), gen_y.term(n)) for n in range(1, settle + 2)
    )
    return outcome(
        {"x": gen_x, "y": gen_y},
        squares_dominated=dominated,
        ratio_converges=converges_in_order(
            [gen_x, gen_y],
            lambda a, b: mul(a, star(b)),
            lambda ta, tb: mul_tails(ta, star_tail(tb)),
            mul(finite_part(x), star(y)),
        ),
    )


PARTS_SUITE = LemmaSuite(
    "YY2-H",
    "finite and infinite parts of x + y, x v y, x ^ y and xy, their order and "
    "block-constancy, and the unique split x = x+ - x-",
    check_parts,
)
STAR_SUITE = LemmaSuite(
    "YY2-Jm",
    "the star map: zero, homogeneity, disjointness, products, powers, order "
    "and the inverse of a weak unit",
    check_star,
)
MUL_DECOMPOSE_SUITE = LemmaSuite(
    "YY2-P",
    "0 <= x <= yz factors as x = ab with 0 <= a <= y and 0 <= b <= z",
    check_mul_decompose,
)
STAR_CONTINUITY_SUITE = LemmaSuite(
    "YY2-q",
    "x_n increasing to x implies x_n* -> x* in order",
    check_star_continuity,
)
RATIO_CONTINUITY_SUITE = LemmaSuite(
    "YY2-r",
    "x_n, y_n increasing with x_n^2 <= y_n implies x_n y_n* -> x^f y*",
    check_ratio_continuity,
)
