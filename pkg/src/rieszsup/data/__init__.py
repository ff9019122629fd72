from __future__ import annotations

__doc__ = """
The `data` package reads the textual forms of elements, bands, sequences and
conditional expectations, loads input documents, and renders reports.
"""

from .codec import (
    build_cond_exp,
    format_band,
    format_cond_exp,
    format_element,
    format_periodic,
    format_value,
    load_text,
    parse_band,
    parse_cond_exp,
    parse_element,
    parse_elements_document,
    parse_partition,
    parse_periodic,
    parse_prob_space,
)
from .documents import (
    BoundDocument,
    load_bound_document,
    load_elements,
    parse_bound_document,
    read_document,
)
from .reports import (
    borel_cantelli_to_dict,
    bound_report_to_dict,
    render_borel_cantelli,
    render_bound_report,
    render_elements,
    to_json,
)

__all__ = [
    "BoundDocument",
    "borel_cantelli_to_dict",
    "bound_report_to_dict",
    "build_cond_exp",
    "format_band",
    "format_cond_exp",
    "format_element",
    "format_periodic",
    "format_value",
    "load_bound_document",
    "load_elements",
    "load_text",
    "parse_band",
    "parse_bound_document",
    "parse_cond_exp",
    "parse_element",
    "parse_elements_document",
    "parse_partition",
    "parse_periodic",
    "parse_prob_space",
    "read_document",
    "render_borel_cantelli",
    "render_bound_report",
    "render_elements",
    "to_json",
]
