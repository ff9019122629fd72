from __future__ import annotations

import json
from typing import Any

from tabulate import tabulate

from rieszsup.atoms import Element
from rieszsup.bounds import BorelCantelliReport, BoundReport

from .codec import format_band, format_element

__doc__ = """
Structured (JSON) and text renderings of bound, Borel-Cantelli and element
reports. Exact values are always written as rational strings; structured
output is sorted so that repeated runs are byte-identical.
"""


def _samples(samples) -> list[dict[str, Any]]:
    return [{"n": n, "value": format_element(x)} for n, x in samples]


def _compact(x: Element) -> str:
    """``c.e`` for constant elements, the coordinate tuple otherwise."""
    values = set(x.to_strings())
    if len(values) == 1:
        (value,) = values
        return f"{value}.e"
    return str(x)


def bound_report_to_dict(report: BoundReport) -> dict[str, Any]:
    out: dict[str, Any] = {
        "lhs": format_element(report.lhs),
        "projection": format_band(report.projection),
        "finite_part_vanishes": report.finite_part_vanishes,
        "rhs_samples": _samples(report.rhs_samples),
        "tail_start": report.tail_start,
        "tail_samples": _samples(report.tail_samples),
        "rhs_limsup": format_element(report.rhs_limsup),
        "certificates": [
            {
                "q": c.q,
                "n": c.n,
                "left": format_element(c.left),
                "right": format_element(c.right),
                "holds": c.holds,
            }
            for c in report.certificates
        ],
        "certificates_hold": report.certificates_hold,
        "verdict": report.verdict,
    }
    if report.corollary_samples:
        out["corollary_samples"] = _samples(report.corollary_samples)
        out["corollary_matches"] = report.corollary_matches
    if report.float_samples:
        out["float_samples"] = [
            {"n": n, "value": list(values)} for n, values in report.float_samples
        ]
    return out


def borel_cantelli_to_dict(report: BorelCantelliReport) -> dict[str, Any]:
    return {
        "depth": report.depth,
        "probabilities": [str(p) for p in report.probabilities],
        "union_value": str(report.union_value),
        "certificate": str(report.certificate),
        "gap": str(report.gap),
        "trajectory": [
            {
                "n": n,
                "union_value": str(u),
                "ratio": str(r),
                "K": str(k),
                "S": str(s),
            }
            for n, (u, r, k, s) in enumerate(
                zip(
                    report.union_values,
                    report.ratios,
                    report.k_values,
                    report.s_values,
                ),
                start=1,
            )
        ],
        "pairwise_independent": report.pairwise_independent,
        "variance_bound_holds": report.variance_bound_holds,
        "closed_form_holds": report.closed_form_holds,
        "certificate_holds": report.certificate_holds,
        "ratios_nondecreasing": report.ratios_nondecreasing,
        "verdict": report.verdict,
    }


def to_json(obj: Any) -> str:
    """Stable JSON text for structured output."""
    return json.dumps(obj, indent=2, sort_keys=True)


def render_bound_report(report: BoundReport) -> str:
    lines = [
        f"lhs            : {_compact(report.lhs)}",
        f"projection P   : {format_band(report.projection)}",
        f"rhs limsup     : {_compact(report.rhs_limsup)}",
        f"tail start q0  : {report.tail_start}",
        "",
    ]
    tail = dict(report.tail_samples)
    corollary = dict(report.corollary_samples)
    rows = []
    for n, value in report.rhs_samples:
        row = [n, _compact(value), _compact(tail[n]) if n in tail else "-"]
        if corollary:
            row.append(_compact(corollary[n]))
        rows.append(row)
    headers = ["n", "P(S* K^2)_{1,n}", "P(S* K^2)_{q0,n}"]
    if corollary:
        headers.append("displayed form")
    lines.append(tabulate(rows, headers=headers))

    failed = [c for c in report.certificates if not c.holds]
    lines += [
        "",
        f"certificates   : {len(report.certificates) - len(failed)}"
        f"/{len(report.certificates)} hold",
    ]
    for c in failed:
        lines.append(f"  FAILED (q={c.q}, n={c.n}): {c.left} < {c.right}")
    if report.corollary_samples:
        status = "matches" if report.corollary_matches else "DIFFERS"
        lines.append(f"displayed form : {status}")
    if report.float_samples:
        lines.append("")
        lines.append(
            tabulate(
                [[n, *values] for n, values in report.float_samples],
                headers=["n (float64)", *(f"atom {w}" for w in range(report.lhs.dim))],
                floatfmt=".10f",
            )
        )
    lines.append(f"verdict        : {report.verdict}")
    return "\n".join(lines)


def render_borel_cantelli(report: BorelCantelliReport) -> str:
    rows = [
        [n, str(u), str(r), float(u - r)]
        for n, (u, r) in enumerate(zip(report.union_values, report.ratios), start=1)
    ]
    table = tabulate(
        rows, headers=["N", "union value", "certificate", "difference"], floatfmt=".3e"
    )
    return "\n".join(
        [
            table,
            "",
            f"gap 1 - union      : {report.gap}",
            f"pairwise independent: {report.pairwise_independent}",
            f"certificate holds  : {report.certificate_holds}",
            f"ratios nondecreasing: {report.ratios_nondecreasing}",
            f"verdict            : {report.verdict}",
        ]
    )


def render_elements(rows: list[tuple[str, ...]], headers: list[str]) -> str:
    return tabulate(rows, headers=headers)
