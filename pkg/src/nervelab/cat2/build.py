"""Constructions on finite 2-categories: realization of Theta_2 objects,
wreath gluing, the simplicial category ``S_p C``, truncation, duals."""

from ..theta import ThetaError
from .core import (
    CategoryError,
    FinCat,
    Fin2Cat,
    Functor,
    TwoFunctor,
    compose_functors,
    discrete_2cat,
    discrete_category,
    from_generators,
    opposite,
    point_category,
    poset_category,
    product,
)


def realize1(S):
    """Poset category of a depth <= 1 Theta object."""
    if S.depth > 1:
        raise ThetaError(f"realize1 needs depth <= 1, got {S.depth}")
    return poset_category(S.width)


def wreath_glue(p, Ts):
    """``Δp ≀ (T_1, ..., T_p)``: objects ``0..p`` and
    ``Hom(i, j) = T_{i+1} x ... x T_j``; composition concatenates tuples."""
    Ts = list(Ts)
    if len(Ts) != p:
        raise CategoryError(f"need {p} factor categories, got {len(Ts)}")
    objects = list(range(p + 1))
    homs = {(i, j): product(Ts[i:j]) for i in objects for j in objects if i <= j}
    hcomp0, hcomp1 = {}, {}
    for i in objects:
        for j in range(i, p + 1):
            for k in range(j, p + 1):
                Hij, Hjk = homs[(i, j)], homs[(j, k)]
                hcomp0[(i, j, k)] = {(g, f): f + g for g in Hjk.objects for f in Hij.objects}
                hcomp1[(i, j, k)] = {(b, a): a + b for b in Hjk.arrows for a in Hij.arrows}
    return Fin2Cat(objects, homs, hcomp0, hcomp1, {i: () for i in objects})


def realize2(S):
    """Strict 2-category presented by a depth <= 2 Theta object."""
    if S.depth > 2:
        raise ThetaError(f"realize2 needs depth <= 2, got {S.depth}")
    return wreath_glue(S.width, [realize1(c) for c in S.children])


def realize2_map(f):
    """The 2-functor ``realize2(S) -> realize2(T)`` of a Theta morphism ``f: S -> T``.

    Object ``i`` goes to ``phi(i)``; in ``Hom(i, j)`` the target coordinate
    ``k'`` is read from the unique source coordinate ``k`` with
    ``phi(k-1) < k' <= phi(k)`` through the child map at ``(k, k')``.
    """
    A, B = realize2(f.source), realize2(f.target)
    phi = f.phi
    owner = {kp: (k, g.phi) for (k, kp), g in f.children}

    def on_obj(i, j, x):
        return tuple(owner[kp][1](x[owner[kp][0] - i - 1]) for kp in range(phi(i) + 1, phi(j) + 1))

    def on_arr(i, j, a):
        return tuple((owner[kp][1](a[owner[kp][0] - i - 1][0]), owner[kp][1](a[owner[kp][0] - i - 1][1]))
                     for kp in range(phi(i) + 1, phi(j) + 1))

    homs = {}
    for (i, j), H in A.homs.items():
        homs[(i, j)] = Functor(H, B.homs[(phi(i), phi(j))],
                               {x: on_obj(i, j, x) for x in H.objects},
                               {a: on_arr(i, j, a) for a in H.arrows})
    return TwoFunctor(A, B, {i: phi(i) for i in A.objects}, homs)


def sigma_prime(T):
    """Two objects with ``Hom(0, 1) = T``."""
    return wreath_glue(1, [T])


def point_2cat():
    return wreath_glue(0, [])


def with_units(objects, homs, hcomp0, hcomp1, units):
    """Fill in the composition tables against unit 1-cells and return the
    2-category. Only triples of pairwise distinct objects need to be given."""
    hcomp0 = {k: dict(v) for k, v in hcomp0.items()}
    hcomp1 = {k: dict(v) for k, v in hcomp1.items()}
    for (a, b), H in homs.items():
        ua, ub = units[a], units[b]
        Ia, Ib = homs[(a, a)].ident[ua], homs[(b, b)].ident[ub]
        hcomp0.setdefault((a, a, b), {}).update({(f, ua): f for f in H.objects})
        hcomp1.setdefault((a, a, b), {}).update({(x, Ia): x for x in H.arrows})
        hcomp0.setdefault((a, b, b), {}).update({(ub, f): f for f in H.objects})
        hcomp1.setdefault((a, b, b), {}).update({(Ib, x): x for x in H.arrows})
    return Fin2Cat(objects, homs, hcomp0, hcomp1, units)


def oriental2():
    """The free 2-triangle: one 2-cell ``a: 02 => 12.01``."""
    unit = {x: f"1_{x}" for x in range(3)}
    homs = {(x, x): discrete_category([unit[x]]) for x in range(3)}
    homs[(0, 1)] = discrete_category(["01"])
    homs[(1, 2)] = discrete_category(["12"])
    homs[(0, 2)] = from_generators(["02", "12.01"], {"a": ("02", "12.01")})
    I = homs[(0, 2)].ident
    return with_units(
        range(3), homs,
        {(0, 1, 2): {("12", "01"): "12.01"}},
        {(0, 1, 2): {("12", "01"): I["12.01"]}},
        unit,
    )


# S_p C -------------------------------------------------------------------

def _object_chains(C, p):
    chains = [(c,) for c in C.objects]
    for _ in range(p):
        chains = [ch + (c,) for ch in chains for c in C.objects if C.has_hom(ch[-1], c)]
    return chains


def S_p(C, p):
    """``S_p C``: the coproduct over object chains ``c_0 .. c_p`` of
    ``Hom(c_0, c_1) x ... x Hom(c_{p-1}, c_p)``.

    Objects are ``(chain, (x_1, ..., x_p))`` and arrows ``(chain, (α_1, ..., α_p))``.
    """
    objects, arrows, src, tgt, ident, comp = [], [], {}, {}, {}, {}
    for ch in _object_chains(C, p):
        P = product([C.hom(ch[i], ch[i + 1]) for i in range(p)])
        for x in P.objects:
            objects.append((ch, x))
            ident[(ch, x)] = (ch, P.ident[x])
        for a in P.arrows:
            arrows.append((ch, a))
            src[(ch, a)] = (ch, P.src[a])
            tgt[(ch, a)] = (ch, P.tgt[a])
        for (g, f), h in P.comp.items():
            comp[((ch, g), (ch, f))] = (ch, h)
    return FinCat(objects, arrows, src, tgt, ident, comp)


def _face_cells(C, ch, xs, i, level):
    """Face ``d_i`` on a chain and a tuple of 1-cells (level 0) or 2-cells (level 1).

    Inner faces compose the two factors meeting at ``c_i``; outer faces drop one.
    """
    p = len(ch) - 1
    if i == 0:
        return ch[1:], xs[1:]
    if i == p:
        return ch[:-1], xs[:-1]
    table = (C.hcomp0 if level == 0 else C.hcomp1)[(ch[i - 1], ch[i], ch[i + 1])]
    return ch[:i] + ch[i + 1:], xs[:i - 1] + (table[(xs[i], xs[i - 1])],) + xs[i + 1:]


def _degeneracy_cells(C, ch, xs, i, level):
    """Degeneracy ``s_i``: repeat ``c_i`` and insert its unit (or the unit's identity)."""
    u = C.units[ch[i]]
    if level == 1:
        u = C.hom(ch[i], ch[i]).ident[u]
    return ch[:i + 1] + ch[i:], xs[:i] + (u,) + xs[i:]


def S_face(C, p, i, source=None, target=None):
    """Functor ``d_i: S_p C -> S_{p-1} C``."""
    if not 0 <= i <= p or p < 1:
        raise CategoryError(f"no face d_{i} out of S_{p}")
    source = source or S_p(C, p)
    target = target or S_p(C, p - 1)
    return Functor(source, target,
                   {(ch, x): _face_cells(C, ch, x, i, 0) for ch, x in source.objects},
                   {(ch, a): _face_cells(C, ch, a, i, 1) for ch, a in source.arrows})


def S_degeneracy(C, p, i, source=None, target=None):
    """Functor ``s_i: S_p C -> S_{p+1} C``."""
    if not 0 <= i <= p:
        raise CategoryError(f"no degeneracy s_{i} out of S_{p}")
    source = source or S_p(C, p)
    target = target or S_p(C, p + 1)
    return Functor(source, target,
                   {(ch, x): _degeneracy_cells(C, ch, x, i, 0) for ch, x in source.objects},
                   {(ch, a): _degeneracy_cells(C, ch, a, i, 1) for ch, a in source.arrows})


def check_S_identities(C, pmax):
    """Check the simplicial identities of ``p -> S_p C`` for ``p <= pmax``.

    Returns a list of failure descriptions (empty when all hold).
    """
    cats = {p: S_p(C, p) for p in range(pmax + 2)}
    d = {(p, i): S_face(C, p, i, cats[p], cats[p - 1]) for p in range(1, pmax + 2) for i in range(p + 1)}
    s = {(p, i): S_degeneracy(C, p, i, cats[p], cats[p + 1]) for p in range(pmax + 1) for i in range(p + 1)}
    problems = []

    def same(F, G, what):
        if F.obj_map != G.obj_map or F.arr_map != G.arr_map:
            problems.append(what)

    def comp(G, F):
        return compose_functors(G, F)

    for p in range(2, pmax + 2):
        for j in range(p + 1):
            for i in range(j):
                same(comp(d[(p - 1, i)], d[(p, j)]), comp(d[(p - 1, j - 1)], d[(p, i)]),
                     f"d_{i} d_{j} = d_{j - 1} d_{i} fails on S_{p}")
    for p in range(pmax + 1):
        for j in range(p + 1):
            for i in range(p + 2):
                lhs = comp(d[(p + 1, i)], s[(p, j)])
                if i < j:
                    same(lhs, comp(s[(p - 1, j - 1)], d[(p, i)]), f"d_{i} s_{j} fails on S_{p}")
                elif i in (j, j + 1):
                    ident = Functor(cats[p], cats[p], {x: x for x in cats[p].objects},
                                    {a: a for a in cats[p].arrows})
                    same(lhs, ident, f"d_{i} s_{j} = id fails on S_{p}")
                else:
                    same(lhs, comp(s[(p - 1, j)], d[(p, i - 1)]), f"d_{i} s_{j} fails on S_{p}")
    for p in range(pmax):
        for j in range(p + 1):
            for i in range(j + 1):
                same(comp(s[(p + 1, i)], s[(p, j)]), comp(s[(p + 1, j + 1)], s[(p, i)]),
                     f"s_{i} s_{j} = s_{j + 1} s_{i} fails on S_{p}")
    return problems


# components, truncation, duals -------------------------------------------

def _components(nodes, edges):
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups = {}
    for x in nodes:
        groups.setdefault(find(x), []).append(x)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: nodes.index(g[0]))


def pi0(C):
    """Connected components (undirected), each listed in object order."""
    nodes = list(C.objects)
    if isinstance(C, FinCat):
        edges = [(C.src[a], C.tgt[a]) for a in C.arrows]
    else:
        edges = list(C.homs)
    return _components(nodes, edges)


def ob(C):
    return tuple(C.objects)


def is_connected(C):
    return len(pi0(C)) == 1


def tau1(C):
    """Intelligent truncation: 1-cells modulo zigzags of 2-cells.

    Arrows are ``(a, b, r)`` with ``r`` the first 1-cell of its class in the
    hom-category's object order.
    """
    rep = {}
    for (a, b), H in C.homs.items():
        for comp_ in _components(list(H.objects), [(H.src[x], H.tgt[x]) for x in H.arrows]):
            for f in comp_:
                rep[(a, b, f)] = comp_[0]
    arrows = sorted({(a, b, r) for (a, b, _), r in rep.items()},
                    key=lambda t: (C.objects.index(t[0]), C.objects.index(t[1]),
                                   C.hom(t[0], t[1])._obj_pos[t[2]]))
    comp = {}
    for a, b, c in C.triples():
        Hab, Hbc = C.hom(a, b), C.hom(b, c)
        for g in Hbc.objects:
            for f in Hab.objects:
                key = ((b, c, rep[(b, c, g)]), (a, b, rep[(a, b, f)]))
                val = (a, c, rep[(a, c, C.hc0(a, b, c, g, f))])
                if comp.setdefault(key, val) != val:
                    raise CategoryError(f"composition not well defined on classes at {key!r}")
    return FinCat(C.objects, arrows, {t: t[0] for t in arrows}, {t: t[1] for t in arrows},
                  {a: (a, a, rep[(a, a, C.units[a])]) for a in C.objects}, comp)


def dualize(C, J):
    """Reverse the ``j``-cells for ``j`` in ``J`` (a subset of ``{1, 2}``)."""
    J = set(J)
    if not J <= {1, 2}:
        raise CategoryError(f"J must be a subset of {{1, 2}}, got {sorted(J)}")
    homs = {k: (opposite(H) if 2 in J else H) for k, H in C.homs.items()}
    hcomp0, hcomp1 = C.hcomp0, C.hcomp1
    if 1 in J:
        homs = {(b, a): H for (a, b), H in homs.items()}
        hcomp0 = {(c, b, a): {(f, g): h for (g, f), h in t.items()} for (a, b, c), t in hcomp0.items()}
        hcomp1 = {(c, b, a): {(f, g): h for (g, f), h in t.items()} for (a, b, c), t in hcomp1.items()}
    return Fin2Cat(C.objects, homs, hcomp0, hcomp1, C.units)


# generators read off the tables ----------------------------------------------

def generators_from_tables(C):
    """``[objects, indecomposable 1-cells, indecomposable 2-cells]``.

    A 1-cell is decomposable when it is a horizontal composite of two
    non-unit 1-cells; a 2-cell when it is a vertical composite of two
    non-identity 2-cells or a horizontal composite of two 2-cells neither of
    which is the identity of a unit. Identities never count.
    """
    dec1, dec2 = set(), set()
    for a, m, b in C.triples():
        Ham, Hmb = C.hom(a, m), C.hom(m, b)
        # the unit 1-cell (and its identity 2-cell) only lives in Hom(x, x)
        ug = C.units[m] if m == b else None
        uf = C.units[a] if a == m else None
        ig = Hmb.ident[ug] if ug is not None else None
        if_ = Ham.ident[uf] if uf is not None else None
        for g in Hmb.objects:
            for f in Ham.objects:
                if g != ug and f != uf:
                    dec1.add((a, b, C.hc0(a, m, b, g, f)))
        for be in Hmb.arrows:
            for al in Ham.arrows:
                if be != ig and al != if_:
                    dec2.add((a, b, C.hc1(a, m, b, be, al)))
    n1 = n2 = 0
    for (a, b), H in C.homs.items():
        n1 += sum(1 for f in H.objects
                  if not (a == b and f == C.units[a]) and (a, b, f) not in dec1)
        vert = {H.comp[(g, f)] for g, f in H.composable_pairs()
                if not H.is_identity(g) and not H.is_identity(f)}
        n2 += sum(1 for x in H.arrows
                  if not H.is_identity(x) and x not in vert and (a, b, x) not in dec2)
    counts = [len(C.objects), n1, n2]
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def discrete_from_1cat(C):
    return discrete_2cat(C)


# named examples ------------------------------------------------------------

def hollow_triangle():
    """Discrete homs; ``Hom(0, 2) = {h, g.f}`` with ``h`` unrelated to ``g.f``."""
    C = from_generators(
        [0, 1, 2], {"f": (0, 1), "g": (1, 2), "h": (0, 2), "g.f": (0, 2)},
        {("g", "f"): "g.f"},
    )
    return discrete_2cat(C)


def parallel_fillers():
    """A triangle whose long edge ``h`` has two parallel 2-cells into ``g.f``."""
    unit = {x: f"1_{x}" for x in range(3)}
    homs = {(x, x): discrete_category([unit[x]]) for x in range(3)}
    homs[(0, 1)] = discrete_category(["f"])
    homs[(1, 2)] = discrete_category(["g"])
    homs[(0, 2)] = from_generators(["h", "g.f"], {"a": ("h", "g.f"), "b": ("h", "g.f")})
    I = homs[(0, 2)].ident
    return with_units(
        range(3), homs,
        {(0, 1, 2): {("g", "f"): "g.f"}},
        {(0, 1, 2): {("g", "f"): I["g.f"]}},
        unit,
    )


def parallel_pair():
    """Two objects and two parallel non-identity arrows."""
    return from_generators([0, 1], {"u": (0, 1), "v": (0, 1)})


def suspended_parallel_pair():
    return sigma_prime(parallel_pair())


def walking_arrow():
    return poset_category(1)


def point():
    return point_category()


def disjoint_points():
    return discrete_category([0, 1])
