"""Exact arithmetic-triplet and slant-grid toolkit over the Gaussian integers.

The package turns Pythagorean triples into arithmetic triplets of
squares and back (one-to-one over the integers, three-to-one over the
Gaussian integers via the zero-sum form), builds and diagnoses 3x3
magic squares / slant grids, generates their sibling triplets with
exact near-miss error terms, and searches for high-square-count slant
grids with a compiled scan kernel (pure-Python fallback included).
"""

from .correspond import (
    ArithTriplet,
    GaussianParity,
    LegTriple,
    NotArithmetic,
    NotPythagorean,
    NotSquare,
    SiblingPair,
    TrivialTriple,
    ZeroSumTriple,
    pyth_to_triplet_int,
    siblings_of_triplet,
    to_zero_sum,
    triplet_to_pyth_int,
    triplet_to_triple,
    triplets_from_triple,
)
from .exact import (
    GaussInt,
    GaussRat,
    MixedRadicals,
    RadicalValue,
    gauss_sqrt,
    isqrt,
    norm,
    normalize_sign,
    radical_mul,
)
from .grids import (
    GapBasis,
    GapRecovery,
    MagicSquare,
    NearMissReport,
    NotAGap,
    arrangement_lines,
    gap_lines,
    gap_recover,
    magic_report,
)
from .search import (
    GapCandidate,
    SearchConfig,
    brute_force_triples,
    enum_triples,
    gap_candidates,
)
from .siblings import (
    DEMO_STUDY_BASIS,
    PseudoGrid,
    SiblingFamily,
    grid_siblings,
    origin_shift_study,
    pseudo_grid,
)

__version__ = "0.1.0"
