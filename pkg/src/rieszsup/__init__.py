"""
rieszsup - exact computations in the sup-completion of an atomic Riesz space
===========================================================================

Elements of the sup-completion are vectors of exact rationals or infinity, one
coordinate per atom. The library provides the lattice and f-algebra structure,
band projections, finite/infinite parts and the star map, exact order limits
of eventually periodic sequences, conditional expectations on finite
probability spaces, and Feng-Li-Shen type lower bounds on limsup events.
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _v

try:
    __version__ = _v(__name__)
except PackageNotFoundError:
    __version__ = "0.0.0"

# Core Data Structures (Atoms)
from .atoms import INF, BandProjection, Element

# Bounds
from .bounds import (
    BorelCantelliReport,
    BoundReport,
    WeightedEventSeq,
    borel_cantelli,
    corollary_m10,
    theorem_m7,
)

# Calculus
from .calculus import FiniteDirectedGrid, PeriodicSeq, decompose, star

# Conditional Expectations
from .conditional import CondExp, ProbSpace, XMatrix
from .errors import RieszError

# Define the public API for the top level package
__all__ = [
    # Atoms
    "INF",
    "BandProjection",
    "Element",
    # Calculus
    "FiniteDirectedGrid",
    "PeriodicSeq",
    "decompose",
    "star",
    # Conditional
    "CondExp",
    "ProbSpace",
    "XMatrix",
    # Bounds
    "BorelCantelliReport",
    "BoundReport",
    "WeightedEventSeq",
    "borel_cantelli",
    "corollary_m10",
    "theorem_m7",
    # Errors
    "RieszError",
]
