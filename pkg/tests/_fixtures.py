"""Shared test fixtures and independent oracles."""

from itertools import combinations, product

from nervelab import cat2
from nervelab.cat2 import Fin2Cat, FinCat
from nervelab.theta import (
    POINT, compose, delta, format_theta, generator_counts, hom, identity, m_n, node, sigma, theta_objects,
)


def _subsets(lo, hi):
    inner = range(lo + 1, hi)
    return [c for k in range(len(inner) + 1) for c in combinations(inner, k)]


def truncated_oriental(n):
    """The n-th oriental with 3-cells turned into equalities.

    Hom(i, j) is the poset of subsets of the open interval (i, j) under
    inclusion; composition takes S, T to S + (j,) + T. Built without any
    library helper so that it can serve as an oracle for the Street nerve.
    """
    homs, h0, h1 = {}, {}, {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            objs = _subsets(i, j)
            arrows = [(s, t) for s in objs for t in objs if set(s) <= set(t)]
            comp = {((t, u), (s, t)): (s, u) for (s, t) in arrows for (t2, u) in arrows if t2 == t}
            homs[(i, j)] = FinCat(objs, arrows, {a: a[0] for a in arrows}, {a: a[1] for a in arrows},
                                  {s: (s, s) for s in objs}, comp)

    def cat(i, j, k, t, s):
        if i == j:
            return t
        if j == k:
            return s
        return s + (j,) + t

    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                A, B = homs[(i, j)], homs[(j, k)]
                h0[(i, j, k)] = {(t, s): cat(i, j, k, t, s) for t in B.objects for s in A.objects}
                h1[(i, j, k)] = {(b, a): (cat(i, j, k, b[0], a[0]), cat(i, j, k, b[1], a[1]))
                                 for b in B.arrows for a in A.arrows}
    return Fin2Cat(range(n + 1), homs, h0, h1, {i: () for i in range(n + 1)})


def theta2_small(limit=150):
    """Every depth-2 Theta object whose realization has at most ``limit`` cells.

    Depth-1 children are simplices, so an object is a tuple of widths.
    Appending a child or widening one only adds cells, which bounds the search.
    """
    out = []

    def grow(ws):
        if any(ws):
            out.append(node(*ws))
        for k in range(limit):
            if cat2.realize2(node(*ws, k)).total_cells() > limit:
                break
            grow(ws + (k,))

    grow(())
    return sorted(out, key=lambda S: (cat2.realize2(S).total_cells(), format_theta(S)))


def comparison_suite(limit=150):
    """Finite loop-free 2-categories for the nerve comparison and duality checks."""
    suite = {f"realize2{format_theta(S)}": cat2.realize2(S) for S in theta2_small(limit)}
    suite["oriental2"] = cat2.oriental2()
    suite["hollow triangle"] = cat2.hollow_triangle()
    suite["parallel fillers"] = cat2.parallel_fillers()
    suite["suspended parallel pair"] = cat2.suspended_parallel_pair()
    return suite


def small_comparison_suite():
    """A quick subset used by the unit tests."""
    names = ["oriental2", "hollow triangle", "parallel fillers", "suspended parallel pair"]
    full = comparison_suite(15)
    return {k: full[k] for k in names} | {k: v for k, v in full.items() if k.startswith("realize2")}


def discrete_suite():
    """1-categories embedded with discrete homs."""
    from nervelab.cat2 import from_generators, poset_category
    return {
        "Δ2": cat2.discrete_2cat(poset_category(2)),
        "Δ3": cat2.discrete_2cat(poset_category(3)),
        "hollow triangle": cat2.hollow_triangle(),
        "parallel pair": cat2.discrete_2cat(cat2.parallel_pair()),
        "commuting square": cat2.discrete_2cat(from_generators(
            ["a", "b", "c", "d"],
            {"f": ("a", "b"), "g": ("b", "d"), "h": ("a", "c"), "k": ("c", "d"), "diag": ("a", "d")},
            {("g", "f"): "diag", ("k", "h"): "diag"},
        )),
    }


def pu_sc_targets():
    return {
        "oriental2": cat2.oriental2(),
        "realize2(Δ1; Δ1)": cat2.realize2(node(1)),
        "realize2(Δ2; Δ1, Δ0)": cat2.realize2(node(1, 0)),
        "realize2(Δ2; Δ1, Δ1)": cat2.realize2(node(1, 1)),
        "realize2(Δ1; Δ2)": cat2.realize2(node(2)),
        "realize2(Δ2; Δ2, Δ1)": cat2.realize2(node(2, 1)),
    }


def pu_sc_sources():
    return {
        "point": cat2.point_2cat(),
        "walking arrow": cat2.realize2(sigma(POINT)),
        "2-disc": cat2.realize2(sigma(sigma(POINT))),
    }


THETA_LAW_SUITES = {
    "widths <= 2": [POINT, delta(1), node(1), node(0, 1)],
    "widths <= 3": [POINT, delta(1), node(1), delta(3)],
}


def check_theta_laws(objs):
    """Exhaustive unit and associativity checks; returns (triples, failures)."""
    homs = {(a, b): list(hom(a, b)) for a in objs for b in objs}
    failures = 0
    for fs in homs.values():
        for f in fs:
            failures += compose(identity(f.target), f) != f
            failures += compose(f, identity(f.source)) != f
    triples = 0
    for A, B, C, D in product(objs, repeat=4):
        for f in homs[(A, B)]:
            for g in homs[(B, C)]:
                gf = compose(g, f)
                for h in homs[(C, D)]:
                    triples += 1
                    failures += compose(h, gf) != compose(compose(h, g), f)
    return triples, failures


def representables(max_sum=12):
    return [S for S in theta_objects(5, 2) if sum(generator_counts(S)) <= max_sum]


__all__ = ["m_n", "truncated_oriental", "theta2_small", "comparison_suite", "small_comparison_suite", "discrete_suite",
           "pu_sc_targets", "pu_sc_sources", "representables", "THETA_LAW_SUITES",
           "check_theta_laws"]
