"""Finite strict 1- and 2-categories as explicit tables."""

from .build import (
    S_degeneracy,
    S_face,
    S_p,
    check_S_identities,
    disjoint_points,
    dualize,
    generators_from_tables,
    hollow_triangle,
    is_connected,
    ob,
    oriental2,
    parallel_fillers,
    parallel_pair,
    pi0,
    point,
    point_2cat,
    realize1,
    realize2,
    realize2_map,
    sigma_prime,
    suspended_parallel_pair,
    tau1,
    walking_arrow,
    with_units,
    wreath_glue,
)
from .core import (
    CategoryError,
    FinCat,
    Fin2Cat,
    Functor,
    TwoFunctor,
    compose_2functors,
    compose_functors,
    discrete_2cat,
    discrete_category,
    from_generators,
    has_discrete_homs,
    opposite,
    point_category,
    poset_category,
    product,
    underlying_1cat,
    validate_2functor,
    validate_fin2cat,
    validate_fincat,
    validate_functor,
)
from .enum import (
    Budget,
    BudgetExceeded,
    are_isomorphic,
    count_2functors,
    count_functors,
    enumerate_2functors,
    enumerate_functors,
    find_2cat_isomorphism,
    find_isomorphism,
)
from .io import dumps, load, loads

__all__ = [name for name in dir() if not name.startswith("_")]
