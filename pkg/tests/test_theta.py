import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _fixtures import THETA_LAW_SUITES, check_theta_laws
from nervelab import cat2
from nervelab.theta import (
    POINT,
    SimplexMap,
    ThetaError,
    ThetaObject,
    compose,
    count_hom,
    delta,
    format_theta,
    generator_counts,
    hom,
    identity,
    m_n,
    m_n_map,
    morphism,
    morphism_from_json,
    morphism_to_json,
    node,
    parse_theta,
    pi_map,
    random_morphism,
    sigma,
    sigma_map,
    theta_dual,
    theta_objects,
)


@st.composite
def thetas(draw, max_width=3, max_depth=3):
    if max_depth == 0:
        return POINT
    n = draw(st.integers(0, max_width))
    return ThetaObject(tuple(draw(thetas(max_width, max_depth - 1)) for _ in range(n)))


def morphisms_between(S, T):
    return st.randoms(use_true_random=False).map(lambda rng: random_morphism(rng, S, T))


def hand_built_pair():
    # (Δ1; Δ1) -> (Δ2; Δ1, Δ0) -> (Δ1; Δ2)
    A, B, C = node(1), node(1, 0), node(2)
    f = morphism(A, B, (0, 2), {(1, 1): identity(delta(1)), (1, 2): morphism(delta(1), POINT, (0, 0))})
    g = morphism(B, C, (0, 1, 1), {(1, 1): m_n_map(SimplexMap(1, 2, (0, 2)))})
    return f, g


def test_generator_counts_examples():
    assert generator_counts(POINT) == [1]
    assert generator_counts(node(3, 0, 2)) == [4, 8, 5]
    assert generator_counts(m_n(2, 3)) == [3, 8, 6]
    assert generator_counts(sigma(sigma(POINT))) == [2, 2, 1]


def test_m_n_examples():
    assert m_n(2, 3) == node(3, 3)
    assert m_n(4) == delta(4)
    assert m_n(0, 5) == POINT


def test_sigma_examples():
    assert sigma(POINT) == delta(1)
    assert sigma(sigma(POINT)) == node(1)
    assert sigma_map(identity(delta(2))) == identity(node(2))


def test_theta_dual_examples():
    S = node(1, 0)
    assert theta_dual(S, set()) == S
    assert theta_dual(S, {1}) == node(0, 1)
    assert theta_dual(node(3, 0, 2), {2}) == node(3, 0, 2)
    assert theta_dual(parse_theta("(Δ1; (Δ2; Δ1, Δ0))"), {2}) == parse_theta("(Δ1; (Δ2; Δ0, Δ1))")


def test_identity_phi():
    assert identity(node(1, 0)).phi == SimplexMap.identity(2)
    assert identity(POINT).children == ()


def test_hand_built_composite():
    f, g = hand_built_pair()
    gf = compose(g, f)
    assert gf.phi.values == (0, 1)
    assert gf.child(1, 1).phi.values == (0, 2)
    assert pi_map(f).values == (0, 2)
    assert pi_map(gf) == pi_map(f).then(pi_map(g))


def _same_2functor(F, G):
    return F.obj_map == G.obj_map and all(
        F.hom_maps[k].obj_map == G.hom_maps[k].obj_map and F.hom_maps[k].arr_map == G.hom_maps[k].arr_map
        for k in F.hom_maps)


def test_hand_built_composite_realizes_functorially():
    f, g = hand_built_pair()
    F, G = cat2.realize2_map(f), cat2.realize2_map(g)
    assert cat2.validate_2functor(F) == [] and cat2.validate_2functor(G) == []
    assert _same_2functor(cat2.realize2_map(compose(g, f)), cat2.compose_2functors(G, F))


def test_compose_rejects_mismatch():
    f, g = hand_built_pair()
    with pytest.raises(ThetaError):
        compose(f, g)


def test_bad_index_family_rejected():
    with pytest.raises(ThetaError):
        morphism(delta(1), delta(1), (0, 1))


def test_count_hom_matches_enumeration():
    for S in theta_objects(2, 2)[:8]:
        for T in theta_objects(2, 2)[:8]:
            assert count_hom(S, T) == len(list(hom(S, T)))
    # monotone maps [1] -> [2]
    assert count_hom(delta(1), delta(2)) == 6


def test_category_laws_exhaustive():
    triples, failures = check_theta_laws(THETA_LAW_SUITES["widths <= 2"])
    assert triples == 42309
    assert failures == 0


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_random_associativity(data):
    S, T, U, V = (data.draw(thetas(3, 2)) for _ in range(4))
    f = data.draw(morphisms_between(S, T))
    g = data.draw(morphisms_between(T, U))
    h = data.draw(morphisms_between(U, V))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(identity(T), f) == f == compose(f, identity(S))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_pi_map_functorial(data):
    S, T, U = (data.draw(thetas(3, 2)) for _ in range(3))
    f = data.draw(morphisms_between(S, T))
    g = data.draw(morphisms_between(T, U))
    assert pi_map(identity(S)) == SimplexMap.identity(S.width)
    assert pi_map(compose(g, f)) == pi_map(f).then(pi_map(g))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_m_n_functorial(data):
    ns = [data.draw(st.integers(0, 2)) for _ in range(3)]
    ms = [data.draw(st.integers(0, 2)) for _ in range(3)]
    ks = [data.draw(st.integers(0, 2)) for _ in range(3)]

    def draw_map(n, m):
        vals = sorted(data.draw(st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1)))
        return SimplexMap(n, m, tuple(vals))

    phis = [draw_map(n, m) for n, m in zip(ns, ms)]
    psis = [draw_map(m, k) for m, k in zip(ms, ks)]
    assert m_n_map(*[SimplexMap.identity(n) for n in ns]) == identity(m_n(*ns))
    assert m_n_map(*[p.then(q) for p, q in zip(phis, psis)]) == \
        compose(m_n_map(*psis), m_n_map(*phis))


@settings(max_examples=200, deadline=None)
@given(thetas(), st.sets(st.integers(1, 4)))
def test_dual_is_involution_and_keeps_counts(S, J):
    D = theta_dual(S, J)
    assert theta_dual(D, J) == S
    assert generator_counts(D) == generator_counts(S)


@settings(max_examples=200, deadline=None)
@given(thetas())
def test_format_parse_round_trip(S):
    assert parse_theta(format_theta(S)) == S


def test_parse_errors():
    for bad in ["(Δ2; Δ1)", "Δ", "(Δ1; Δ0", "x"]:
        with pytest.raises(ThetaError):
            parse_theta(bad)
    assert parse_theta("(D2; Delta1, D0)") == node(1, 0)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_morphism_json_round_trip(data):
    S, T = data.draw(thetas(2, 3)), data.draw(thetas(2, 3))
    f = data.draw(morphisms_between(S, T))
    assert morphism_from_json(morphism_to_json(f)) == f


@settings(max_examples=30, deadline=None)
@given(thetas(3, 2))
def test_realized_generators_match(S):
    C = cat2.realize2(S)
    assert cat2.validate_fin2cat(C) == []
    assert cat2.generators_from_tables(C) == generator_counts(S)
