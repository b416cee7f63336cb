from .chains import (
    CHAINS_FORMAT,
    ChainComplexError,
    ChainComplexZ,
    HomologyResult,
    betti,
    betti_rational,
    invariant_factors,
    is_point_homology,
)
from .kernel import BACKEND, HAVE_COMPILED, unit_eliminate
from .matrix import SparseIntMatrix, rank_bareiss, smith_normal_form

__all__ = [
    "BACKEND",
    "CHAINS_FORMAT",
    "ChainComplexError",
    "ChainComplexZ",
    "HAVE_COMPILED",
    "HomologyResult",
    "SparseIntMatrix",
    "betti",
    "betti_rational",
    "invariant_factors",
    "is_point_homology",
    "rank_bareiss",
    "smith_normal_form",
    "unit_eliminate",
]
