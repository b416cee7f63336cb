from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nervelab.adc import oriental_complex
from nervelab.homology import (
    ChainComplexError,
    ChainComplexZ,
    HomologyResult,
    SparseIntMatrix,
    betti,
    betti_rational,
    invariant_factors,
    is_point_homology,
    rank_bareiss,
    smith_normal_form,
)


def parallel_pair_complex():
    d1 = SparseIntMatrix.from_dense([[-1, -1], [1, 1]])
    return ChainComplexZ([2, 2], [None, d1], bounded=True)


def simplicial_complex_chains(facets):
    """Oriented simplicial chains of the complex generated by ``facets``."""
    faces = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(combinations(sorted(f), k))
    top = max(len(f) for f in faces) - 1
    basis = [sorted(f for f in faces if len(f) == p + 1) for p in range(top + 1)]
    diffs = [None]
    for p in range(1, top + 1):
        row = {x: i for i, x in enumerate(basis[p - 1])}
        triples = [(row[x[:l] + x[l + 1:]], j, (-1) ** l)
                   for j, x in enumerate(basis[p]) for l in range(p + 1)]
        diffs.append(SparseIntMatrix.from_triples(len(basis[p - 1]), len(basis[p]), triples))
    return ChainComplexZ([len(b) for b in basis], diffs, bounded=True)


def test_smith_normal_form_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert smith_normal_form([[2, 0], [0, 4]]) == [2, 4]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[0, 0], [0, 0]]) == []


def test_parallel_pair_is_a_circle():
    r = betti(parallel_pair_complex())
    assert r.betti == [1, 1]
    assert r.torsion == [[], []]
    assert not is_point_homology(r)


def test_zero_complex():
    r = betti(ChainComplexZ.zero(3))
    assert r.betti == [0, 0, 0, 0]


def test_oriental_is_point():
    for n in range(6):
        assert is_point_homology(betti(oriental_complex(n).chain_complex()))


def test_projective_plane_torsion():
    # minimal 6-vertex triangulation of RP^2
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)]
    r = betti(simplicial_complex_chains(facets))
    assert r.betti == [1, 0, 0]
    assert r.torsion == [[], [2], []]


def test_dd_nonzero_rejected():
    d1 = SparseIntMatrix.from_dense([[1]])
    d2 = SparseIntMatrix.from_dense([[1]])
    cx = ChainComplexZ([1, 1, 1], [None, d1, d2])
    with pytest.raises(ChainComplexError):
        betti(cx)


def test_shape_mismatch_rejected():
    with pytest.raises(ChainComplexError):
        ChainComplexZ([1, 2], [None, SparseIntMatrix(2, 2)])


def test_valid_range_for_truncated_complex():
    cx = oriental_complex(3).chain_complex()
    cx.bounded = False
    assert betti(cx).valid_range == 2
    assert is_point_homology(HomologyResult([1, 0, 5], [[], [], []], 1))


def test_json_round_trip():
    cx = simplicial_complex_chains([(0, 1, 2), (2, 3)])
    back = ChainComplexZ.loads(cx.dumps())
    assert back.ranks == cx.ranks
    assert all(back.diffs[p] == cx.diffs[p] for p in range(1, cx.top + 1))
    assert back.bounded


facet_lists = st.lists(
    st.sets(st.integers(0, 6), min_size=1, max_size=4).map(lambda s: tuple(sorted(s))),
    min_size=1, max_size=8,
)


@settings(max_examples=60, deadline=None)
@given(facet_lists)
def test_euler_characteristic_and_rational_agreement(facets):
    cx = simplicial_complex_chains(facets)
    r = betti(cx)
    assert r.betti == betti_rational(cx)
    assert sum((-1) ** p * b for p, b in enumerate(r.betti)) == cx.euler_characteristic()


small_matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


@settings(max_examples=80, deadline=None)
@given(small_matrices)
def test_invariant_factors_match_dense_snf(rows):
    M = SparseIntMatrix.from_dense(rows)
    factors = invariant_factors(M)
    assert factors == smith_normal_form(rows)
    assert len(factors) == rank_bareiss(rows)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
