"""Nerves of finite 1- and 2-categories."""

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from ..cat2.core import underlying_1cat
from .simplicial import BiSimplicialSet, SimplicialSet


# nerve of a 1-category -----------------------------------------------------

def nerve1(C, dmax):
    """Usual nerve. An ``n``-simplex is ``(objects c_0..c_n, arrows f_1..f_n)``."""
    simplices = [[((x,), ()) for x in C.objects]]
    out = {x: C.out_arrows(x) for x in C.objects}
    for _ in range(dmax):
        simplices.append([(objs + (C.tgt[f],), arrs + (f,))
                          for objs, arrs in simplices[-1] for f in out[objs[-1]]])

    def face(n, i, x):
        objs, arrs = x
        if i == 0:
            return objs[1:], arrs[1:]
        if i == n:
            return objs[:-1], arrs[:-1]
        return objs[:i] + objs[i + 1:], arrs[:i - 1] + (C.comp[(arrs[i], arrs[i - 1])],) + arrs[i + 1:]

    def degeneracy(n, i, x):
        objs, arrs = x
        return objs[:i + 1] + objs[i:], arrs[:i] + (C.ident[objs[i]],) + arrs[i:]

    def maybe_degenerate(n, i, x):
        return x[1][i] == C.ident[x[0][i]]

    return SimplicialSet(simplices, face, degeneracy, maybe_degenerate)


# Street nerve of a 2-category ----------------------------------------------

class StreetSimplex(NamedTuple):
    """A 2-functor from the ``n``-th oriental into a 2-category.

    ``edges`` lists ``f_ij`` for ``i < j`` and ``triangles`` lists
    ``α_ijk: f_ik => f_jk ∘ f_ij`` for ``i < j < k``, both in lexicographic order.
    """

    vertices: tuple
    edges: tuple
    triangles: tuple

    @property
    def dim(self):
        return len(self.vertices) - 1

    def f(self, i, j):
        return self.edges[_pair_index(self.dim)[(i, j)]]

    def alpha(self, i, j, k):
        return self.triangles[_triple_index(self.dim)[(i, j, k)]]


_PAIRS, _TRIPLES = {}, {}


def _pair_index(n):
    if n not in _PAIRS:
        _PAIRS[n] = {p: k for k, p in enumerate(combinations(range(n + 1), 2))}
    return _PAIRS[n]


def _triple_index(n):
    if n not in _TRIPLES:
        _TRIPLES[n] = {t: k for k, t in enumerate(combinations(range(n + 1), 3))}
    return _TRIPLES[n]


def tetrahedron_holds(C, c, f, a, i, j, k, l):
    """The 3-cell relation on vertices ``i < j < k < l``, both sides in ``Hom(c_i, c_l)``:
    ``(α_jkl ∗ f_ij) · α_ijl == (f_kl ∗ α_ijk) · α_ikl``."""
    H = C.hom(c[i], c[l])
    Hij, Hkl = C.hom(c[i], c[j]), C.hom(c[k], c[l])
    left = H.comp[(C.hc1(c[i], c[j], c[l], a[(j, k, l)], Hij.ident[f[(i, j)]]), a[(i, j, l)])]
    right = H.comp[(C.hc1(c[i], c[k], c[l], Hkl.ident[f[(k, l)]], a[(i, j, k)]), a[(i, k, l)])]
    return left == right


def _pack(n, c, f, a):
    return StreetSimplex(tuple(c), tuple(f[p] for p in combinations(range(n + 1), 2)),
                         tuple(a[t] for t in combinations(range(n + 1), 3)))


def _unpack(x):
    n = x.dim
    f = dict(zip(combinations(range(n + 1), 2), x.edges))
    a = dict(zip(combinations(range(n + 1), 3), x.triangles))
    return list(x.vertices), f, a


def _extend(C, x):
    """All ``(n+1)``-simplices whose last face ``d_{n+1}`` is ``x``."""
    n = x.dim
    c, f, a = _unpack(x)
    m = n + 1
    out = []

    def edges_down(i, c, f, a):
        # choose f_{i,m}, then α_{i,j,m} for j = i+1..n
        if i < 0:
            out.append(_pack(m, c, f, a))
            return
        H = C.hom(c[i], c[m])
        if H is None:
            return
        for fim in H.objects:
            f[(i, m)] = fim
            triangles(i, i + 1, c, f, a, H)
        f.pop((i, m), None)

    def triangles(i, j, c, f, a, H):
        if j > n:
            edges_down(i - 1, c, f, a)
            return
        target = C.hc0(c[i], c[j], c[m], f[(j, m)], f[(i, j)])
        for al in H.hom(f[(i, m)], target):
            a[(i, j, m)] = al
            if all(tetrahedron_holds(C, c, f, a, i, jp, j, m) for jp in range(i + 1, j)):
                triangles(i, j + 1, c, f, a, H)
        a.pop((i, j, m), None)

    for cm in C.objects:
        H = C.hom(c[n], cm)
        if H is None:
            continue
        c2 = c + [cm]
        for f_last in H.objects:
            f2 = dict(f)
            f2[(n, m)] = f_last
            edges_down(n - 1, c2, f2, dict(a))
    return out


@lru_cache(maxsize=None)
def _face_recipe(n, m):
    """Positions of the edges and triangles of an ``n``-simplex that survive ``d_m``."""
    keep = [v for v in range(n + 1) if v != m]
    pairs, triples = _pair_index(n), _triple_index(n)
    return (tuple(pairs[p] for p in combinations(keep, 2)),
            tuple(triples[t] for t in combinations(keep, 3)))


@lru_cache(maxsize=None)
def _degeneracy_recipe(n, m):
    """For ``s_m`` of an ``n``-simplex: each new edge is an old edge index or
    ``None`` (the unit at vertex ``m``); each new triangle is an old triangle
    index or ``(k,)`` (the identity 2-cell on new edge ``k``)."""
    pairs, triples, new_pairs = _pair_index(n), _triple_index(n), _pair_index(n + 1)

    def sig(v):
        return v if v <= m else v - 1

    edges = tuple(pairs[(sig(i), sig(j))] if sig(i) < sig(j) else None
                  for i, j in combinations(range(n + 2), 2))
    tris = tuple(triples[(sig(i), sig(j), sig(k))] if sig(i) < sig(j) < sig(k) else (new_pairs[(i, k)],)
                 for i, j, k in combinations(range(n + 2), 3))
    return edges, tris


def street_face(C, n, m, x):
    """``d_m``: forget vertex ``m``."""
    edges, tris = _face_recipe(n, m)
    return StreetSimplex(x.vertices[:m] + x.vertices[m + 1:], tuple(x.edges[k] for k in edges),
                         tuple(x.triangles[k] for k in tris))


def street_degeneracy(C, n, m, x):
    """``s_m``: repeat vertex ``m`` with unit 1-cells and identity 2-cells."""
    edges_r, tris_r = _degeneracy_recipe(n, m)
    c2 = x.vertices[:m + 1] + x.vertices[m:]
    unit = C.units[x.vertices[m]]
    edges = tuple(unit if k is None else x.edges[k] for k in edges_r)
    pairs = list(combinations(range(n + 2), 2))
    tris = []
    for r in tris_r:
        if isinstance(r, int):
            tris.append(x.triangles[r])
        else:
            i, k = pairs[r[0]]
            tris.append(C.hom(c2[i], c2[k]).ident[edges[r[0]]])
    return StreetSimplex(c2, edges, tuple(tris))


def street_nerve2(C, dmax):
    """Street nerve truncated at ``dmax``, built by extending simplices one vertex at a time."""
    simplices = [[_pack(0, [x], {}, {}) for x in C.objects]]
    for _ in range(dmax):
        simplices.append([y for x in simplices[-1] for y in _extend(C, x)])
    def maybe_degenerate(n, i, x):
        # s_i y repeats vertex i joined by its unit
        return x.vertices[i] == x.vertices[i + 1] and x.f(i, i + 1) == C.units[x.vertices[i]]

    return SimplicialSet(simplices,
                         lambda n, i, x: street_face(C, n, i, x),
                         lambda n, i, x: street_degeneracy(C, n, i, x),
                         maybe_degenerate)


def street_to_chain(x):
    """Spine of a Street simplex as a ``nerve1`` simplex of the underlying category."""
    n = x.dim
    return (x.vertices, tuple((x.vertices[i], x.vertices[i + 1], x.f(i, i + 1)) for i in range(n)))


def compare_with_underlying(C, dmax):
    """Check that the spine map ``street_nerve2(C) -> nerve1(underlying C)`` is a
    dimensionwise bijection commuting with faces and degeneracies; returns problems."""
    S, N = street_nerve2(C, dmax), nerve1(underlying_1cat(C), dmax)
    problems = []
    for n in range(dmax + 1):
        image = [street_to_chain(x) for x in S.simplices[n]]
        if len(set(image)) != len(image):
            problems.append(f"spine map not injective in dimension {n}")
        if set(image) != set(N.simplices[n]):
            problems.append(f"spine map not onto in dimension {n}")
        for x, y in zip(S.simplices[n], image):
            for i in range(n + 1):
                if n and street_to_chain(S.face(n, i, x)) != N.face(n, i, y):
                    problems.append(f"d_{i} not preserved in dimension {n}")
                if n < dmax and street_to_chain(S.degeneracy(n, i, x)) != N.degeneracy(n, i, y):
                    problems.append(f"s_{i} not preserved in dimension {n}")
    return problems


def boundary_fillers(X, n):
    """Compatible ``(n-1)``-spheres in ``X`` and how many ``n``-simplices fill each.

    A sphere is a tuple ``(y_0, ..., y_n)`` with ``d_i y_j = d_{j-1} y_i`` for
    ``i < j``; it is enumerated from the ``(n-1)``-simplices alone. Returns a
    dict ``{"spheres", "unfilled", "multiply_filled", "max_fillers"}``.
    """
    lower = X.simplices[n - 1]
    by_face0 = {}
    for y in lower:
        by_face0.setdefault(X.face(n - 1, 0, y), []).append(y)
    spheres = []

    def grow(ys):
        j = len(ys)
        if j == n + 1:
            spheres.append(tuple(ys))
            return
        cands = lower if j == 0 else by_face0.get(X.face(n - 1, j - 1, ys[0]), [])
        for y in cands:
            if all(X.face(n - 1, i, y) == X.face(n - 1, j - 1, ys[i]) for i in range(j)):
                ys.append(y)
                grow(ys)
                ys.pop()

    grow([])
    fillers = {}
    for x in X.simplices[n]:
        key = tuple(X.face(n, i, x) for i in range(n + 1))
        fillers[key] = fillers.get(key, 0) + 1
    counts = [fillers.get(s, 0) for s in spheres]
    return {
        "spheres": len(spheres),
        "unfilled": sum(1 for k in counts if k == 0),
        "multiply_filled": sum(1 for k in counts if k > 1),
        "max_fillers": max(counts, default=0),
        "orphan_simplices": sum(fillers.values()) - sum(counts),
    }


# multi-simplicial nerve ----------------------------------------------------

def multinerve2(C, pmax, qmax):
    """``X_{p,q}``: object chains ``c_0..c_p`` with one ``q``-simplex of the nerve
    of each ``Hom(c_{i-1}, c_i)``. Cells are ``(chain, (σ_1, ..., σ_p))``."""
    hom_nerves = {k: nerve1(H, qmax) for k, H in C.homs.items()}
    chains = [[(x,) for x in C.objects]]
    for _ in range(pmax):
        chains.append([ch + (y,) for ch in chains[-1] for y in C.objects if C.has_hom(ch[-1], y)])

    def cells(p, q):
        out = []
        for ch in chains[p]:
            factors = [hom_nerves[(ch[k], ch[k + 1])].simplices[q] for k in range(p)]
            combos = [()]
            for fs in factors:
                combos = [t + (s,) for t in combos for s in fs]
            out += [(ch, t) for t in combos]
        return out

    def hcomp_simplex(a, b, c, g, f):
        (go, ga), (fo, fa) = g, f
        return (tuple(C.hc0(a, b, c, y, x) for y, x in zip(go, fo)),
                tuple(C.hc1(a, b, c, y, x) for y, x in zip(ga, fa)))

    def unit_simplex(x, q):
        u = C.units[x]
        return ((u,) * (q + 1), (C.hom(x, x).ident[u],) * q)

    def hface(p, q, i, cell):
        ch, sig = cell
        if i == 0:
            return ch[1:], sig[1:]
        if i == p:
            return ch[:-1], sig[:-1]
        comp = hcomp_simplex(ch[i - 1], ch[i], ch[i + 1], sig[i], sig[i - 1])
        return ch[:i] + ch[i + 1:], sig[:i - 1] + (comp,) + sig[i + 1:]

    def hdeg(p, q, i, cell):
        ch, sig = cell
        return ch[:i + 1] + ch[i:], sig[:i] + (unit_simplex(ch[i], q),) + sig[i:]

    def vface(p, q, j, cell):
        ch, sig = cell
        return ch, tuple(hom_nerves[(ch[k], ch[k + 1])].face(q, j, s) for k, s in enumerate(sig))

    def vdeg(p, q, j, cell):
        ch, sig = cell
        return ch, tuple(hom_nerves[(ch[k], ch[k + 1])].degeneracy(q, j, s) for k, s in enumerate(sig))

    return BiSimplicialSet(cells, hface, vface, hdeg, vdeg, pmax, qmax)
