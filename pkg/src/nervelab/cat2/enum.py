"""Backtracking enumeration of functors and strict 2-functors between finite
categories, and isomorphism search built on it."""

import os

from .core import Functor, TwoFunctor

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allows."""


class Budget:
    def __init__(self, limit=None):
        if limit is None:
            limit = int(os.environ.get("NERVELAB_BUDGET", DEFAULT_BUDGET))
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit and self.used > self.limit:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


def _as_budget(budget):
    return budget if isinstance(budget, Budget) else Budget(budget)


def _factorization_counts(A):
    counts = {a: 0 for a in A.arrows}
    for (g, f), h in A.comp.items():
        if not A.is_identity(g) and not A.is_identity(f):
            counts[h] += 1
    return counts


def enumerate_functors(A, B, forced_obj=None, forced_arr=None, iso=False, budget=None):
    """Yield every functor ``A -> B`` extending the forced assignments.

    With ``iso=True`` only isomorphisms are produced (the sizes must agree).
    Non-identity arrows are assigned generators first; every composition
    constraint is checked as soon as its last arrow is assigned, and a
    composite whose factors are known is forced outright.
    """
    budget = _as_budget(budget)
    forced_obj = forced_obj or {}
    forced_arr = forced_arr or {}
    if iso and (len(A.objects) != len(B.objects) or len(A.arrows) != len(B.arrows)):
        return
    objs = list(A.objects)
    counts = _factorization_counts(A)
    arrs = sorted(A.non_identity_arrows(), key=lambda a: (counts[a], A._arr_pos[a]))
    pos = {a: k for k, a in enumerate(arrs)}
    # constraints (g, f, h) among non-identity arrows, filed under the last one assigned
    by_last = {a: [] for a in arrs}
    forcing = {a: [] for a in arrs}
    for (g, f), h in A.comp.items():
        if A.is_identity(g) or A.is_identity(f):
            continue
        members = [g, f] + ([] if A.is_identity(h) else [h])
        last = max(members, key=pos.__getitem__)
        if last == h and h not in (g, f):
            forcing[h].append((g, f))
        else:
            by_last[last].append((g, f, h))
    obj_map, arr_map = {}, {}
    forced_ids = [a for a in forced_arr if A.is_identity(a)]
    used_obj, used_arr = set(), set()

    def value(a):
        if A.is_identity(a):
            return B.ident[obj_map[A.src[a]]]
        return arr_map[a]

    def assign_obj(k):
        if k == len(objs):
            yield from assign_arr(0)
            return
        x = objs[k]
        cands = [forced_obj[x]] if x in forced_obj else B.objects
        for y in cands:
            budget.tick()
            if iso and y in used_obj:
                continue
            obj_map[x] = y
            ok = True
            for x2 in objs[:k + 1]:
                y2 = obj_map[x2]
                for s, t, ys, yt in ((x2, x, y2, y), (x, x2, y, y2)):
                    n = len(A.hom(s, t))
                    if n and not B.hom(ys, yt):
                        ok = False
                    elif iso and n != len(B.hom(ys, yt)):
                        ok = False
            if ok:
                used_obj.add(y)
                yield from assign_obj(k + 1)
                used_obj.discard(y)
            del obj_map[x]

    def assign_arr(k):
        if k == len(arrs):
            if any(forced_arr[e] != value(e) for e in forced_ids):
                return
            yield Functor(A, B, dict(obj_map),
                          {a: value(a) for a in A.arrows})
            return
        a = arrs[k]
        s, t = obj_map[A.src[a]], obj_map[A.tgt[a]]
        if forcing[a]:
            g, f = forcing[a][0]
            cands = [B.comp[(value(g), value(f))]]
            if any(B.comp[(value(g2), value(f2))] != cands[0] for g2, f2 in forcing[a][1:]):
                return
        else:
            cands = B.hom(s, t)
        if a in forced_arr:
            cands = [c for c in cands if c == forced_arr[a]]
        for b in cands:
            budget.tick()
            if B.src[b] != s or B.tgt[b] != t:
                continue
            if iso and (b in used_arr or B.is_identity(b)):
                continue
            arr_map[a] = b
            if all(B.comp[(value(g), value(f))] == value(h) for g, f, h in by_last[a]):
                used_arr.add(b)
                yield from assign_arr(k + 1)
                used_arr.discard(b)
            del arr_map[a]

    yield from assign_obj(0)


def count_functors(A, B, budget=None):
    return sum(1 for _ in enumerate_functors(A, B, budget=budget))


def find_isomorphism(A, B, budget=None):
    """An isomorphism of finite categories ``A -> B`` or ``None``."""
    return next(enumerate_functors(A, B, iso=True, budget=budget), None)


def _hom_order(A):
    """Hom pairs sorted so that composites come after their factors where possible."""
    def inner(pair):
        a, b = pair
        return sum(1 for m in A.objects
                   if m not in (a, b) and A.has_hom(a, m) and A.has_hom(m, b))
    idx = {x: k for k, x in enumerate(A.objects)}
    return sorted(A.homs, key=lambda p: (inner(p), p[0] != p[1], idx[p[0]], idx[p[1]]))


def enumerate_2functors(A, B, iso=False, budget=None):
    """Yield every strict 2-functor ``A -> B`` (each exactly once).

    Objects are assigned first (pruning on hom emptiness), then one hom
    functor per pair of objects. Values fixed by horizontal composition of
    already-chosen hom functors are forced; the remaining compatibility
    conditions are checked as soon as all three hom functors involved are
    known. ``budget`` caps the number of search nodes (see ``Budget``).
    """
    budget = _as_budget(budget)
    if iso and A.cell_counts() != B.cell_counts():
        return
    objs = list(A.objects)
    pairs = _hom_order(A)
    order = {p: k for k, p in enumerate(pairs)}
    # triples grouped by the pair assigned last: composite triples force, factor triples check
    forcing, checking = {p: [] for p in pairs}, {p: [] for p in pairs}
    for a, m, b in A.triples():
        trio = [(a, m), (m, b), (a, b)]
        last = max(trio, key=order.__getitem__)
        if last == (a, b) and order[(a, m)] < order[last] and order[(m, b)] < order[last]:
            forcing[last].append((a, m, b))
        else:
            checking[last].append((a, m, b))
    obj_map, hom_maps = {}, {}
    used = set()

    def assign_obj(k):
        if k == len(objs):
            yield from assign_hom(0)
            return
        x = objs[k]
        for y in B.objects:
            budget.tick()
            if iso and y in used:
                continue
            obj_map[x] = y
            ok = True
            for x2 in objs[:k + 1]:
                y2 = obj_map[x2]
                for s, t, ys, yt in ((x2, x, y2, y), (x, x2, y, y2)):
                    HA, HB = A.hom(s, t), B.hom(ys, yt)
                    if HA is not None and HB is None:
                        ok = False
                    elif iso and (HA is None) != (HB is None):
                        ok = False
                    elif iso and HA is not None and (len(HA.objects), len(HA.arrows)) != (len(HB.objects), len(HB.arrows)):
                        ok = False
            if ok:
                used.add(y)
                yield from assign_obj(k + 1)
                used.discard(y)
            del obj_map[x]

    def forced_for(p):
        a, b = p
        fo, fa = {}, {}
        if a == b:
            u = A.units[a]
            fo[u] = B.units[obj_map[a]]
            fa[A.hom(a, a).ident[u]] = B.hom(obj_map[a], obj_map[a]).ident[fo[u]]
        for x, m, y in forcing[p]:
            Fx, Fm, Fy = obj_map[x], obj_map[m], obj_map[y]
            G, F = hom_maps[(m, y)], hom_maps[(x, m)]
            for (g, f), h in A.hcomp0[(x, m, y)].items():
                v = B.hc0(Fx, Fm, Fy, G.obj_map[g], F.obj_map[f])
                if fo.setdefault(h, v) != v:
                    return None
            for (be, al), h in A.hcomp1[(x, m, y)].items():
                v = B.hc1(Fx, Fm, Fy, G.arr_map[be], F.arr_map[al])
                if fa.setdefault(h, v) != v:
                    return None
        return fo, fa

    def compatible(x, m, y):
        Fx, Fm, Fy = obj_map[x], obj_map[m], obj_map[y]
        G, F, H = hom_maps[(m, y)], hom_maps[(x, m)], hom_maps[(x, y)]
        for (g, f), h in A.hcomp0[(x, m, y)].items():
            if H.obj_map[h] != B.hc0(Fx, Fm, Fy, G.obj_map[g], F.obj_map[f]):
                return False
        for (be, al), h in A.hcomp1[(x, m, y)].items():
            if H.arr_map[h] != B.hc1(Fx, Fm, Fy, G.arr_map[be], F.arr_map[al]):
                return False
        return True

    def assign_hom(k):
        if k == len(pairs):
            yield TwoFunctor(A, B, dict(obj_map), dict(hom_maps))
            return
        p = pairs[k]
        forced = forced_for(p)
        if forced is None:
            return
        HA, HB = A.homs[p], B.hom(obj_map[p[0]], obj_map[p[1]])
        for F in enumerate_functors(HA, HB, forced[0], forced[1], iso=iso, budget=budget):
            hom_maps[p] = F
            if all(compatible(*t) for t in checking[p]):
                yield from assign_hom(k + 1)
            del hom_maps[p]

    yield from assign_obj(0)


def count_2functors(A, B, budget=None):
    return sum(1 for _ in enumerate_2functors(A, B, budget=budget))


def find_2cat_isomorphism(A, B, budget=None):
    """A strict 2-isomorphism ``A -> B`` or ``None``."""
    return next(enumerate_2functors(A, B, iso=True, budget=budget), None)


def are_isomorphic(A, B, budget=None):
    from .core import FinCat
    if isinstance(A, FinCat):
        return find_isomorphism(A, B, budget) is not None
    return find_2cat_isomorphism(A, B, budget) is not None
