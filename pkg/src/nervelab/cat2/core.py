"""Finite strict 1- and 2-categories stored as explicit composition tables."""

from dataclasses import dataclass, field
from itertools import product as iproduct


class CategoryError(ValueError):
    pass


class FinCat:
    """A finite category given by its full composition table.

    ``comp[(g, f)]`` is ``g ∘ f`` and is defined exactly when
    ``tgt[f] == src[g]``. Objects and arrows are kept in a fixed order; that
    order is what "least representative" means elsewhere.
    """

    def __init__(self, objects, arrows, src, tgt, ident, comp):
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self._homs = {}
        for a in self.arrows:
            self._homs.setdefault((self.src[a], self.tgt[a]), []).append(a)
        self._obj_pos = {x: i for i, x in enumerate(self.objects)}
        self._arr_pos = {a: i for i, a in enumerate(self.arrows)}

    def hom(self, x, y):
        return self._homs.get((x, y), [])

    def out_arrows(self, x):
        return [a for a in self.arrows if self.src[a] == x]

    def is_identity(self, a):
        return self.ident.get(self.src[a]) == a

    def non_identity_arrows(self):
        return [a for a in self.arrows if not self.is_identity(a)]

    def composable_pairs(self):
        """All ``(g, f)`` with ``tgt f == src g``."""
        for f in self.arrows:
            for g in self.arrows:
                if self.src[g] == self.tgt[f]:
                    yield g, f

    def __len__(self):
        return len(self.objects) + len(self.arrows)

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (set(self.objects) == set(other.objects) and set(self.arrows) == set(other.arrows)
                and self.src == other.src and self.tgt == other.tgt
                and self.ident == other.ident and self.comp == other.comp)

    def __hash__(self):
        return hash((frozenset(self.objects), frozenset(self.arrows)))

    def __repr__(self):
        return f"FinCat({len(self.objects)} objects, {len(self.arrows)} arrows)"


def validate_fincat(C):
    problems = []
    for x in C.objects:
        e = C.ident.get(x)
        if e is None or C.src.get(e) != x or C.tgt.get(e) != x:
            problems.append(f"bad identity at object {x!r}")
    if problems:
        return problems
    for a in C.arrows:
        if C.src[a] not in C._obj_pos or C.tgt[a] not in C._obj_pos:
            problems.append(f"arrow {a!r} has an endpoint outside the objects")
    pairs = set()
    for g, f in C.composable_pairs():
        pairs.add((g, f))
        if (g, f) not in C.comp:
            problems.append(f"composite of {g!r} and {f!r} missing")
            continue
        h = C.comp[(g, f)]
        if C.src.get(h) != C.src[f] or C.tgt.get(h) != C.tgt[g]:
            problems.append(f"composite {h!r} of {g!r}, {f!r} has wrong endpoints")
    extra = set(C.comp) - pairs
    if extra:
        problems.append(f"composition defined on {len(extra)} non-composable pairs")
    if problems:
        return problems
    for a in C.arrows:
        if C.comp[(a, C.ident[C.src[a]])] != a or C.comp[(C.ident[C.tgt[a]], a)] != a:
            problems.append(f"identity law fails at {a!r}")
    for f in C.arrows:
        for g in C.out_arrows(C.tgt[f]):
            gf = C.comp[(g, f)]
            for h in C.out_arrows(C.tgt[g]):
                if C.comp[(h, gf)] != C.comp[(C.comp[(h, g)], f)]:
                    problems.append(f"associativity fails at {h!r}, {g!r}, {f!r}")
    return problems


def product(cats):
    """Cartesian product; objects and arrows are tuples. Empty product = point."""
    cats = list(cats)
    objects = [tuple(t) for t in iproduct(*(c.objects for c in cats))]
    arrows = [tuple(t) for t in iproduct(*(c.arrows for c in cats))]
    src = {a: tuple(c.src[x] for c, x in zip(cats, a)) for a in arrows}
    tgt = {a: tuple(c.tgt[x] for c, x in zip(cats, a)) for a in arrows}
    ident = {o: tuple(c.ident[x] for c, x in zip(cats, o)) for o in objects}
    comp = {}
    if cats:
        for g in arrows:
            for f in arrows:
                if tgt[f] == src[g]:
                    comp[(g, f)] = tuple(c.comp[(y, x)] for c, y, x in zip(cats, g, f))
    else:
        comp[((), ())] = ()
    return FinCat(objects, arrows, src, tgt, ident, comp)


def poset_category(n):
    """The ordinal ``0 < 1 < ... < n``; arrows are pairs ``(i, j)`` with ``i <= j``."""
    objects = list(range(n + 1))
    arrows = [(i, j) for i in objects for j in objects if i <= j]
    comp = {((j, k), (i, j)): (i, k) for (i, j) in arrows for k in range(j, n + 1)}
    return FinCat(objects, arrows, {a: a[0] for a in arrows}, {a: a[1] for a in arrows},
                  {i: (i, i) for i in objects}, comp)


def point_category():
    return poset_category(0)


def discrete_category(objects):
    objects = list(objects)
    return FinCat(objects, objects, {x: x for x in objects}, {x: x for x in objects},
                  {x: x for x in objects}, {(x, x): x for x in objects})


def opposite(C):
    return FinCat(C.objects, C.arrows, C.tgt, C.src, C.ident,
                  {(f, g): h for (g, f), h in C.comp.items()})


def from_generators(objects, arrows, relations=()):
    """Small helper: category given by objects, named non-identity arrows
    ``{name: (src, tgt)}`` and an explicit composition table ``{(g, f): h}``
    on the non-identity composable pairs. Identities are ``("id", x)``."""
    objects = list(objects)
    names = list(arrows)
    src = {a: arrows[a][0] for a in names}
    tgt = {a: arrows[a][1] for a in names}
    ident = {}
    for x in objects:
        e = ("id", x)
        ident[x] = e
        src[e] = tgt[e] = x
    all_arrows = [ident[x] for x in objects] + names
    comp = dict(relations)
    for a in all_arrows:
        comp[(a, ident[src[a]])] = a
        comp[(ident[tgt[a]], a)] = a
    return FinCat(objects, all_arrows, src, tgt, ident, comp)


class Fin2Cat:
    """A finite strict 2-category.

    ``homs[(a, b)]`` is the hom-category (absent means empty),
    ``hcomp0[(a, b, c)][(g, f)]`` and ``hcomp1[(a, b, c)][(beta, alpha)]`` give
    horizontal composition ``Hom(b, c) x Hom(a, b) -> Hom(a, c)`` on 1-cells and
    2-cells, and ``units[a]`` is the identity 1-cell of ``a``.
    """

    def __init__(self, objects, homs, hcomp0, hcomp1, units):
        self.objects = tuple(objects)
        self.homs = {k: v for k, v in homs.items() if v.objects}
        self.hcomp0 = hcomp0
        self.hcomp1 = hcomp1
        self.units = dict(units)

    def hom(self, a, b):
        return self.homs.get((a, b))

    def has_hom(self, a, b):
        return (a, b) in self.homs

    def hc0(self, a, b, c, g, f):
        return self.hcomp0[(a, b, c)][(g, f)]

    def hc1(self, a, b, c, beta, alpha):
        return self.hcomp1[(a, b, c)][(beta, alpha)]

    def one_cells(self):
        for (a, b), H in self.homs.items():
            for f in H.objects:
                yield a, b, f

    def two_cells(self):
        for (a, b), H in self.homs.items():
            for al in H.arrows:
                yield a, b, al

    def cell_counts(self):
        """``(objects, 1-cells, 2-cells)``, identities included."""
        return (len(self.objects),
                sum(len(H.objects) for H in self.homs.values()),
                sum(len(H.arrows) for H in self.homs.values()))

    def total_cells(self):
        return sum(self.cell_counts())

    def triples(self):
        """Object triples ``(a, b, c)`` with ``Hom(a, b)`` and ``Hom(b, c)`` nonempty."""
        for (a, b) in self.homs:
            for c in self.objects:
                if (b, c) in self.homs:
                    yield a, b, c

    def is_loop_free(self):
        """No nonidentity endo-1-cells, no directed cycles, loop-free homs."""
        for a in self.objects:
            H = self.hom(a, a)
            if H is None or len(H.objects) != 1 or len(H.arrows) != 1:
                return False
        if _has_cycle(self.objects, [(a, b) for (a, b) in self.homs if a != b]):
            return False
        for H in self.homs.values():
            if any(H.src[x] == H.tgt[x] and not H.is_identity(x) for x in H.arrows):
                return False
            if _has_cycle(H.objects, [(H.src[x], H.tgt[x]) for x in H.arrows if H.src[x] != H.tgt[x]]):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Fin2Cat):
            return NotImplemented
        return (set(self.objects) == set(other.objects) and self.homs == other.homs
                and self.units == other.units
                and {k: v for k, v in self.hcomp0.items() if v} == {k: v for k, v in other.hcomp0.items() if v}
                and {k: v for k, v in self.hcomp1.items() if v} == {k: v for k, v in other.hcomp1.items() if v})

    def __repr__(self):
        return "Fin2Cat(cells={})".format(self.cell_counts())


def _has_cycle(nodes, edges):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
    state = {}

    def visit(v):
        state[v] = 1
        for w in adj.get(v, ()):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state.get(v, 0) == 0 and visit(v) for v in nodes)


def validate_fin2cat(C):
    """Exhaustive check of the strict 2-category axioms; returns problem strings."""
    problems = []
    for (a, b), H in C.homs.items():
        problems += [f"Hom({a!r},{b!r}): {p}" for p in validate_fincat(H)]
    for a in C.objects:
        H = C.hom(a, a)
        if H is None or C.units.get(a) not in H.objects:
            problems.append(f"missing unit 1-cell at {a!r}")
    if problems:
        return problems

    for a, b, c in C.triples():
        Hab, Hbc, Hac = C.hom(a, b), C.hom(b, c), C.hom(a, c)
        if Hac is None:
            problems.append(f"Hom({a!r},{c!r}) empty but composites exist")
            continue
        t0 = C.hcomp0.get((a, b, c), {})
        t1 = C.hcomp1.get((a, b, c), {})
        for g in Hbc.objects:
            for f in Hab.objects:
                if t0.get((g, f)) not in Hac._obj_pos:
                    problems.append(f"hcomp of 1-cells {g!r}, {f!r} undefined")
        for be in Hbc.arrows:
            for al in Hab.arrows:
                x = t1.get((be, al))
                if x not in Hac._arr_pos:
                    problems.append(f"hcomp of 2-cells {be!r}, {al!r} undefined")
                    continue
                if (Hac.src[x] != t0.get((Hbc.src[be], Hab.src[al]))
                        or Hac.tgt[x] != t0.get((Hbc.tgt[be], Hab.tgt[al]))):
                    problems.append(f"hcomp of {be!r}, {al!r} has wrong source/target")
        if problems:
            continue
        for g in Hbc.objects:
            for f in Hab.objects:
                if t1[(Hbc.ident[g], Hab.ident[f])] != Hac.ident[t0[(g, f)]]:
                    problems.append(f"hcomp does not preserve identities at {g!r}, {f!r}")
        # interchange: hcomp is a functor on the product category
        for b2, b1 in Hbc.composable_pairs():
            for a2, a1 in Hab.composable_pairs():
                lhs = t1[(Hbc.comp[(b2, b1)], Hab.comp[(a2, a1)])]
                rhs = Hac.comp[(t1[(b2, a2)], t1[(b1, a1)])]
                if lhs != rhs:
                    problems.append(f"interchange fails at {(b2, b1, a2, a1)!r}")
    if problems:
        return problems

    for a in C.objects:
        u = C.units[a]
        iu = C.hom(a, a).ident[u]
        for (x, y), H in C.homs.items():
            if x == a:
                if any(C.hc0(a, a, y, f, u) != f for f in H.objects) or \
                        any(C.hc1(a, a, y, al, iu) != al for al in H.arrows):
                    problems.append(f"right unit law fails at {a!r}")
            if y == a:
                if any(C.hc0(x, a, a, u, f) != f for f in H.objects) or \
                        any(C.hc1(x, a, a, iu, al) != al for al in H.arrows):
                    problems.append(f"left unit law fails at {a!r}")
    for a, b, c in C.triples():
        for d in C.objects:
            if not C.has_hom(c, d):
                continue
            Hab, Hbc, Hcd = C.hom(a, b), C.hom(b, c), C.hom(c, d)
            for h in Hcd.arrows:
                for g in Hbc.arrows:
                    hg = C.hc1(b, c, d, h, g)
                    for f in Hab.arrows:
                        if C.hc1(a, b, d, hg, f) != C.hc1(a, c, d, h, C.hc1(a, b, c, g, f)):
                            problems.append(f"hcomp associativity fails at {(h, g, f)!r}")
            for h in Hcd.objects:
                for g in Hbc.objects:
                    hg = C.hc0(b, c, d, h, g)
                    for f in Hab.objects:
                        if C.hc0(a, b, d, hg, f) != C.hc0(a, c, d, h, C.hc0(a, b, c, g, f)):
                            problems.append(f"1-cell associativity fails at {(h, g, f)!r}")
    return problems


def discrete_2cat(C):
    """A 1-category as a 2-category with only identity 2-cells.

    The 1-cells of ``Hom(a, b)`` are the arrows of ``C`` and each 2-cell is
    labelled by the 1-cell it is the identity of.
    """
    homs = {}
    for x in C.objects:
        for y in C.objects:
            arrs = C.hom(x, y)
            if arrs:
                homs[(x, y)] = discrete_category(arrs)
    table = {}
    for (g, f), h in C.comp.items():
        table.setdefault((C.src[f], C.tgt[f], C.tgt[g]), {})[(g, f)] = h
    return Fin2Cat(C.objects, homs, table, {k: dict(v) for k, v in table.items()},
                   {x: C.ident[x] for x in C.objects})


def underlying_1cat(C):
    """Objects and 1-cells of ``C``; arrows are labelled ``(a, b, f)``."""
    arrows = [(a, b, f) for a, b, f in C.one_cells()]
    comp = {}
    for a, b, c in C.triples():
        for g in C.hom(b, c).objects:
            for f in C.hom(a, b).objects:
                comp[((b, c, g), (a, b, f))] = (a, c, C.hc0(a, b, c, g, f))
    return FinCat(C.objects, arrows, {x: x[0] for x in arrows}, {x: x[1] for x in arrows},
                  {a: (a, a, C.units[a]) for a in C.objects}, comp)


def has_discrete_homs(C):
    return all(len(H.arrows) == len(H.objects) for H in C.homs.values())


@dataclass
class Functor:
    source: FinCat
    target: FinCat
    obj_map: dict
    arr_map: dict

    def key(self):
        return (tuple(self.obj_map[x] for x in self.source.objects),
                tuple(self.arr_map[a] for a in self.source.arrows))


def validate_functor(F):
    A, B = F.source, F.target
    problems = []
    for x in A.objects:
        if F.obj_map.get(x) not in B._obj_pos:
            problems.append(f"object {x!r} not mapped into target")
    for a in A.arrows:
        b = F.arr_map.get(a)
        if b not in B._arr_pos:
            problems.append(f"arrow {a!r} not mapped into target")
        elif B.src[b] != F.obj_map[A.src[a]] or B.tgt[b] != F.obj_map[A.tgt[a]]:
            problems.append(f"arrow {a!r} mapped with wrong endpoints")
    if problems:
        return problems
    for x in A.objects:
        if F.arr_map[A.ident[x]] != B.ident[F.obj_map[x]]:
            problems.append(f"identity of {x!r} not preserved")
    for (g, f), h in A.comp.items():
        if F.arr_map[h] != B.comp[(F.arr_map[g], F.arr_map[f])]:
            problems.append(f"composite {g!r}∘{f!r} not preserved")
    return problems


def compose_functors(G, F):
    return Functor(F.source, G.target,
                   {x: G.obj_map[y] for x, y in F.obj_map.items()},
                   {a: G.arr_map[b] for a, b in F.arr_map.items()})


@dataclass
class TwoFunctor:
    source: Fin2Cat
    target: Fin2Cat
    obj_map: dict
    hom_maps: dict = field(default_factory=dict)   # (a, b) -> Functor

    def key(self):
        return (tuple(self.obj_map[x] for x in self.source.objects),
                tuple(self.hom_maps[p].key() for p in sorted(self.hom_maps, key=repr)))


def compose_2functors(G, F):
    """``G ∘ F`` for strict 2-functors."""
    homs = {}
    for (a, b), Fm in F.hom_maps.items():
        homs[(a, b)] = compose_functors(G.hom_maps[(F.obj_map[a], F.obj_map[b])], Fm)
    return TwoFunctor(F.source, G.target, {x: G.obj_map[y] for x, y in F.obj_map.items()}, homs)


def validate_2functor(F):
    A, B = F.source, F.target
    problems = []
    for x in A.objects:
        if F.obj_map.get(x) not in B.objects:
            problems.append(f"object {x!r} not mapped")
    if problems:
        return problems
    for (a, b), H in A.homs.items():
        Fm = F.hom_maps.get((a, b))
        target = B.hom(F.obj_map[a], F.obj_map[b])
        if Fm is None or target is None:
            problems.append(f"no hom functor on ({a!r}, {b!r})")
            continue
        problems += [f"hom ({a!r},{b!r}): {p}" for p in validate_functor(Fm)]
    if problems:
        return problems
    for a in A.objects:
        if F.hom_maps[(a, a)].obj_map[A.units[a]] != B.units[F.obj_map[a]]:
            problems.append(f"unit at {a!r} not preserved")
    for a, b, c in A.triples():
        Fa, Fb, Fc = (F.obj_map[x] for x in (a, b, c))
        Fab, Fbc, Fac = F.hom_maps[(a, b)], F.hom_maps[(b, c)], F.hom_maps[(a, c)]
        for g in A.hom(b, c).objects:
            for f in A.hom(a, b).objects:
                if Fac.obj_map[A.hc0(a, b, c, g, f)] != B.hc0(Fa, Fb, Fc, Fbc.obj_map[g], Fab.obj_map[f]):
                    problems.append(f"hcomp of 1-cells {g!r}, {f!r} not preserved")
        for be in A.hom(b, c).arrows:
            for al in A.hom(a, b).arrows:
                if Fac.arr_map[A.hc1(a, b, c, be, al)] != B.hc1(Fa, Fb, Fc, Fbc.arr_map[be], Fab.arr_map[al]):
                    problems.append(f"hcomp of 2-cells {be!r}, {al!r} not preserved")
    return problems
