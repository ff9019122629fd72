from __future__ import annotations

__doc__ = """
This package contains one property suite per lemma of the calculus.

Each suite pairs a statement with a check that draws a random instance from an
`InstanceBuilder` and evaluates every claim of the lemma on it exactly.
`ALL_LEMMA_SUITES` is the registry the `check` command selects from.
"""

from .bands import (
    BAND_INFINITY_SUITE,
    BAND_LIMITS_SUITE,
    LATTICE_SUITE,
    PRINCIPAL_PROJECTION_SUITE,
)
from .base import LemmaSuite, TrialResult, outcome
from .bounds import (
    BOREL_CANTELLI_SUITE,
    BOUND_SUITE,
    INFINITE_PARTS_SUITE,
    QUANTITIES_SUITE,
)
from .matrices import (
    BLOCK_SUMS_SUITE,
    COMPRESSION_SUITE,
    COND_EXP_SUITE,
    GRAM_SUITE,
    PSD_SUITE,
)
from .nets import (
    CONVERGENT_FACTOR_SUITE,
    DECREASING_SUMS_SUITE,
    DISJOINT_SUMS_SUITE,
    FINITE_MULTIPLIER_SUITE,
    INFINITE_MULTIPLIER_SUITE,
    PRODUCT_CHAIN_SUITE,
    PRODUCT_LIMITS_SUITE,
    SERIES_TAILS_SUITE,
    SUM_LIMITS_SUITE,
    TRANSLATES_SUITE,
    WINDOW_ORACLE_SUITE,
)
from .parts import (
    MUL_DECOMPOSE_SUITE,
    PARTS_SUITE,
    RATIO_CONTINUITY_SUITE,
    STAR_CONTINUITY_SUITE,
    STAR_SUITE,
)

ALL_LEMMA_SUITES = {
    suite.name: suite
    for suite in (
        DISJOINT_SUMS_SUITE,
        DECREASING_SUMS_SUITE,
        PARTS_SUITE,
        TRANSLATES_SUITE,
        SUM_LIMITS_SUITE,
        INFINITE_MULTIPLIER_SUITE,
        BAND_LIMITS_SUITE,
        PRODUCT_LIMITS_SUITE,
        STAR_SUITE,
        STAR_CONTINUITY_SUITE,
        RATIO_CONTINUITY_SUITE,
        FINITE_MULTIPLIER_SUITE,
        PRODUCT_CHAIN_SUITE,
        CONVERGENT_FACTOR_SUITE,
        MUL_DECOMPOSE_SUITE,
        SERIES_TAILS_SUITE,
        BAND_INFINITY_SUITE,
        PSD_SUITE,
        COMPRESSION_SUITE,
        BLOCK_SUMS_SUITE,
        GRAM_SUITE,
        QUANTITIES_SUITE,
        INFINITE_PARTS_SUITE,
        BOUND_SUITE,
        BOREL_CANTELLI_SUITE,
        LATTICE_SUITE,
        PRINCIPAL_PROJECTION_SUITE,
        COND_EXP_SUITE,
        WINDOW_ORACLE_SUITE,
    )
}

__all__ = [
    "ALL_LEMMA_SUITES",
    "LemmaSuite",
    "TrialResult",
    "outcome",
]
