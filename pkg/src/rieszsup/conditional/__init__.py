from __future__ import annotations

__doc__ = """
The `conditional` package models conditional Riesz triples (X, e, T) on
finite probability spaces and the X-valued matrix calculus built on them.
"""

from .cond_exp import (
    CondExp,
    ProbSpace,
    apply_T,
    hom_evaluate,
    is_T_independent,
    pairwise_independent,
)
from .xmatrix import (
    XMatrix,
    add_matrices,
    block_gamma_check,
    det,
    exact_det,
    gamma,
    gram_matrix,
    is_psd,
    is_psd_rational,
    quadratic_form,
)

__all__ = [
    "CondExp",
    "ProbSpace",
    "XMatrix",
    "add_matrices",
    "apply_T",
    "block_gamma_check",
    "det",
    "exact_det",
    "gamma",
    "gram_matrix",
    "hom_evaluate",
    "is_T_independent",
    "is_psd",
    "is_psd_rational",
    "pairwise_independent",
    "quadratic_form",
]
