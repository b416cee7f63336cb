"""Nerves of finite categories and 2-categories, and their chain complexes."""

from .nerves import (
    StreetSimplex,
    boundary_fillers,
    compare_with_underlying,
    multinerve2,
    nerve1,
    street_degeneracy,
    street_face,
    street_nerve2,
    street_to_chain,
    tetrahedron_holds,
)
from .simplicial import (
    BiSimplicialSet,
    SimplicialSet,
    TruncationError,
    check_bisimplicial_identities,
    check_simplicial_identities,
    degenerate_images,
    diagonal,
    normalized_chains,
    total_complex,
)

__all__ = [name for name in dir() if not name.startswith("_")]
