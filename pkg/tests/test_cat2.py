from itertools import product as iproduct
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import pu_sc_sources, pu_sc_targets
from nervelab import cat2
from nervelab.cat2 import (
    Budget,
    BudgetExceeded,
    CategoryError,
    S_p,
    count_2functors,
    count_functors,
    dualize,
    oriental2,
    poset_category,
    realize1,
    realize2,
    tau1,
    validate_fin2cat,
    validate_fincat,
)
from nervelab.theta import POINT, ThetaError, delta, generator_counts, m_n, node, sigma, theta_dual, theta_objects


def product_oracle(widths):
    """(objects, 1-cells, 2-cells) of realize2 from binomial counts alone."""
    n = len(widths)
    ones = twos = 0
    for i in range(n + 1):
        for j in range(i, n + 1):
            ks = widths[i:j]
            ones += prod(k + 1 for k in ks)
            twos += prod(comb(k + 2, 2) for k in ks)
    return n + 1, ones, twos


def test_realize1_counts():
    assert (len(realize1(POINT).objects), len(realize1(POINT).arrows)) == (1, 1)
    R = realize1(delta(3))
    assert (len(R.objects), len(R.arrows)) == (4, 10)
    assert validate_fincat(R) == []
    with pytest.raises(ThetaError):
        realize1(node(1))


def test_realize2_counts():
    C = realize2(node(3, 0, 2))
    assert C.cell_counts() == (4, 31, 97)
    assert C.cell_counts() == product_oracle([3, 0, 2])
    assert validate_fin2cat(C) == []
    assert cat2.generators_from_tables(C) == [4, 8, 5]
    assert cat2.generators_from_tables(realize2(m_n(2, 3))) == [3, 8, 6]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=3))
def test_realize2_matches_product_oracle(widths):
    C = realize2(node(*widths))
    assert C.cell_counts() == product_oracle(widths)
    assert validate_fin2cat(C) == []


def test_two_disc():
    D = realize2(sigma(sigma(POINT)))
    assert list(D.objects) == [0, 1]
    H = D.hom(0, 1)
    assert (len(H.objects), len(H.arrows)) == (2, 3)
    assert D.hom(1, 0) is None


def test_sigma_prime_and_wreath_glue():
    arrow = realize1(delta(1))
    assert cat2.sigma_prime(cat2.point()) == realize2(delta(1))
    assert cat2.sigma_prime(arrow) == realize2(sigma(sigma(POINT)))
    assert cat2.wreath_glue(1, [arrow]) == cat2.sigma_prime(arrow)
    assert cat2.are_isomorphic(cat2.wreath_glue(3, [cat2.point()] * 3),
                               cat2.discrete_2cat(poset_category(3)))
    glued = cat2.wreath_glue(3, [realize1(delta(3)), realize1(POINT), realize1(delta(2))])
    assert glued == realize2(node(3, 0, 2))
    for T in [realize1(delta(2)), cat2.parallel_pair()]:
        assert list(cat2.sigma_prime(T).objects) == [0, 1]


def test_constructions_validate():
    for C in [oriental2(), cat2.hollow_triangle(), cat2.parallel_fillers(),
              cat2.suspended_parallel_pair(), cat2.point_2cat()]:
        assert validate_fin2cat(C) == []
    for S in theta_objects(2, 2):
        assert validate_fin2cat(realize2(S)) == []


def test_validate_catches_broken_interchange():
    C = oriental2()
    bad = cat2.Fin2Cat(C.objects, C.homs, C.hcomp0,
                       {**C.hcomp1, (0, 1, 2): {k: "a" for k in C.hcomp1[(0, 1, 2)]}}, C.units)
    assert validate_fin2cat(bad) != []


def test_oriental2_counts():
    C = oriental2()
    assert C.cell_counts() == (3, 7, 8)
    assert cat2.generators_from_tables(C) == [3, 3, 1]
    assert len(C.hom(0, 2).objects) == 2


def test_S0_is_discrete():
    C = oriental2()
    S0 = S_p(C, 0)
    assert len(S0.objects) == 3
    assert S0.non_identity_arrows() == []


def test_S1_example():
    S1 = S_p(realize2(node(1)), 1)
    assert (len(S1.objects), len(S1.arrows)) == (4, 5)
    assert len(cat2.pi0(S1)) == 3


def test_S_object_count_formula():
    for C in [oriental2(), realize2(node(2, 1)), cat2.parallel_fillers()]:
        objs = list(C.objects)
        for p in range(4):
            expected = sum(
                prod(len(C.hom(ch[i], ch[i + 1]).objects) if C.has_hom(ch[i], ch[i + 1]) else 0
                     for i in range(p))
                for ch in iproduct(objs, repeat=p + 1))
            assert len(S_p(C, p).objects) == expected


def test_S_simplicial_identities():
    for C in [oriental2(), realize2(node(1, 1)), cat2.parallel_fillers()]:
        assert cat2.check_S_identities(C, 4) == []


def test_pi0_examples():
    assert len(cat2.pi0(realize1(delta(4)))) == 1
    assert len(cat2.pi0(cat2.disjoint_points())) == 2
    assert cat2.is_connected(oriental2())
    assert cat2.ob(oriental2()) == (0, 1, 2)


def test_tau1_examples():
    assert cat2.find_isomorphism(tau1(oriental2()), realize1(delta(2))) is not None
    assert cat2.find_isomorphism(tau1(realize2(node(3, 1))), realize1(delta(2))) is not None
    T = tau1(cat2.hollow_triangle())
    assert cat2.find_isomorphism(T, cat2.underlying_1cat(cat2.hollow_triangle())) is not None
    assert len(T.arrows) == 7


def test_dualize_examples():
    C = oriental2()
    assert dualize(C, set()) == C
    for J in [{1}, {2}, {1, 2}]:
        assert dualize(dualize(C, J), J) == C
        assert validate_fin2cat(dualize(C, J)) == []
    D = dualize(C, {2})
    assert (D.hom(0, 2).src["a"], D.hom(0, 2).tgt["a"]) == ("12.01", "02")
    with pytest.raises(CategoryError):
        dualize(C, {3})


def test_dualize_matches_theta_dual():
    for S, J in [(node(1, 0), {1}), (node(1, 0), {2}), (node(2, 1), {1, 2}), (m_n(2, 3), {1})]:
        assert cat2.are_isomorphic(dualize(realize2(S), J), realize2(theta_dual(S, J)))


def test_enumeration_basics():
    for C in [oriental2(), realize2(node(2, 1)), cat2.parallel_fillers()]:
        assert count_2functors(cat2.point_2cat(), C) == len(C.objects)
        assert count_2functors(realize2(delta(1)), C) == C.cell_counts()[1]


def test_enumerated_functors_are_valid_and_distinct():
    Fs = list(cat2.enumerate_2functors(realize2(sigma(sigma(POINT))), oriental2()))
    assert all(cat2.validate_2functor(F) == [] for F in Fs)
    assert len({F.key() for F in Fs}) == len(Fs)


def test_pu_sc_one_factor_against_1functors():
    for C in pu_sc_targets().values():
        for T in [realize1(POINT), realize1(delta(1)), realize1(delta(2))]:
            assert count_2functors(cat2.wreath_glue(1, [T]), C) == count_functors(T, S_p(C, 1))


def test_pu_sc_counts():
    from nervelab.cli import verify_pu_sc
    for T in pu_sc_sources().values():
        for C in pu_sc_targets().values():
            assert verify_pu_sc(T, C, 2).ok


def test_isomorphism_search():
    assert cat2.are_isomorphic(realize2(node(1, 0)), realize2(node(1, 0)))
    assert not cat2.are_isomorphic(realize2(node(1, 0)), realize2(node(0, 1)))
    assert cat2.are_isomorphic(realize2(node(1, 0)), dualize(realize2(node(0, 1)), {1}))


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        count_2functors(realize2(node(2, 2)), realize2(node(3, 0, 2)), budget=Budget(50))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("NERVELAB_BUDGET", "7")
    assert Budget().limit == 7


def test_json_round_trip():
    for C in [oriental2(), realize2(node(2, 1)), cat2.parallel_fillers(), cat2.point_2cat()]:
        assert cat2.loads(cat2.dumps(C)) == C
    P = cat2.parallel_pair()
    assert cat2.loads(cat2.dumps(P)) == cat2.discrete_2cat(P)
    F = next(cat2.enumerate_2functors(realize2(delta(1)), oriental2()))
    G = cat2.loads(cat2.dumps(F))
    assert G.obj_map == F.obj_map and G.source == F.source


def test_generators_match_theta_counts():
    for S in theta_objects(3, 2):
        if realize2(S).total_cells() <= 200:
            assert cat2.generators_from_tables(realize2(S)) == generator_counts(S)
