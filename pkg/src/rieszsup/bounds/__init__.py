from __future__ import annotations

__doc__ = """
The `bounds` package builds the K, S and R quantities of weighted event
sequences and evaluates the Feng-Li-Shen type lower bounds on them, including
the Borel-Cantelli experiment and the exact asymptotic checks.
"""

from .borel_cantelli import (
    MAX_DEPTH,
    BorelCantelliReport,
    borel_cantelli,
    coordinate_events,
    product_space,
)
from .limits import (
    LimitStatus,
    M5LimitReport,
    Quadratic,
    TailIndependenceReport,
    limsup_projection,
    m5_claimed_limit,
    m5_limit_check,
    ratio_limit,
    rhs_limsup,
    rhs_value,
    tail_independence_check,
)
from .quantities import (
    K,
    R,
    R_j,
    S,
    WeightedEventSeq,
    k_squared_below_s,
    running_sums,
    split_identity_holds,
)
from .theorem import (
    BoundReport,
    Certificate,
    corollary_form,
    corollary_m10,
    float_rhs_trajectory,
    star_weights,
    theorem_m7,
)

__all__ = [
    "MAX_DEPTH",
    "BorelCantelliReport",
    "BoundReport",
    "Certificate",
    "K",
    "LimitStatus",
    "M5LimitReport",
    "Quadratic",
    "R",
    "R_j",
    "S",
    "TailIndependenceReport",
    "WeightedEventSeq",
    "borel_cantelli",
    "coordinate_events",
    "corollary_form",
    "corollary_m10",
    "float_rhs_trajectory",
    "k_squared_below_s",
    "limsup_projection",
    "m5_claimed_limit",
    "m5_limit_check",
    "product_space",
    "ratio_limit",
    "rhs_limsup",
    "rhs_value",
    "running_sums",
    "split_identity_holds",
    "star_weights",
    "tail_independence_check",
    "theorem_m7",
]
