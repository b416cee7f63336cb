"""Truncated simplicial and bisimplicial sets, their normalized chains,
diagonals and total complexes."""

from ..homology import ChainComplexZ, SparseIntMatrix


class TruncationError(ValueError):
    pass


class SimplicialSet:
    """Simplices in dimensions ``0..dmax`` with face and degeneracy callables.

    ``face(n, i, x)`` maps an ``n``-simplex to an ``(n-1)``-simplex and
    ``degeneracy(n, i, x)`` an ``n``-simplex to an ``(n+1)``-simplex.
    Simplices must be hashable; equality of labels is equality of simplices.
    ``maybe_degenerate(n, i, x)``, if given, is a cheap necessary condition for
    ``x = s_i y``; it only prunes the exact degeneracy test.
    """

    def __init__(self, simplices, face, degeneracy, maybe_degenerate=None):
        self.simplices = [list(s) for s in simplices]
        self._face = face
        self._degeneracy = degeneracy
        self._maybe = maybe_degenerate
        self._index = {}
        self._nondeg = {}

    @property
    def dmax(self):
        return len(self.simplices) - 1

    def face(self, n, i, x):
        return self._face(n, i, x)

    def degeneracy(self, n, i, x):
        return self._degeneracy(n, i, x)

    def counts(self):
        return [len(s) for s in self.simplices]

    def index(self, n):
        if n not in self._index:
            self._index[n] = {x: k for k, x in enumerate(self.simplices[n])}
        return self._index[n]

    def is_degenerate(self, n, x):
        # x = s_i y forces y = d_i x
        maybe = self._maybe
        return n > 0 and any((maybe is None or maybe(n, i, x))
                             and self._degeneracy(n - 1, i, self._face(n, i, x)) == x
                             for i in range(n))

    def nondegenerate(self, n):
        if n not in self._nondeg:
            self._nondeg[n] = [x for x in self.simplices[n] if not self.is_degenerate(n, x)]
        return self._nondeg[n]

    def nondegenerate_counts(self):
        return [len(self.nondegenerate(n)) for n in range(self.dmax + 1)]


def check_simplicial_identities(X, upto=None):
    """All simplicial identities on the stored simplices; returns problem strings."""
    top = X.dmax if upto is None else min(upto, X.dmax)
    problems = []
    d, s = X.face, X.degeneracy
    for n in range(1, top + 1):
        below = X.index(n - 1)
        for x in X.simplices[n]:
            for i in range(n + 1):
                if d(n, i, x) not in below:
                    problems.append(f"d_{i} of {x!r} is not a stored simplex")
    for n in range(top):
        above = X.index(n + 1)
        for x in X.simplices[n]:
            for i in range(n + 1):
                if s(n, i, x) not in above:
                    problems.append(f"s_{i} of {x!r} is not a stored simplex")
    if problems:
        return problems
    for n in range(2, top + 1):
        for x in X.simplices[n]:
            for j in range(n + 1):
                for i in range(j):
                    if d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)):
                        problems.append(f"d_{i} d_{j} fails on {x!r}")
    for n in range(top):
        for x in X.simplices[n]:
            for j in range(n + 1):
                y = s(n, j, x)
                for i in range(n + 2):
                    got = d(n + 1, i, y)
                    if i < j:
                        want = s(n - 1, j - 1, d(n, i, x))
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = s(n - 1, j, d(n, i - 1, x))
                    if got != want:
                        problems.append(f"d_{i} s_{j} fails on {x!r}")
                if n + 1 < top:
                    for i in range(j + 1):
                        if s(n + 1, i, y) != s(n + 1, j + 1, s(n, i, x)):
                            problems.append(f"s_{i} s_{j} fails on {x!r}")
    return problems


def degenerate_images(X, n):
    """The set ``{s_i y}`` over stored ``(n-1)``-simplices ``y`` (brute force)."""
    return {X.degeneracy(n - 1, i, y) for y in X.simplices[n - 1] for i in range(n)}


def normalized_chains(X, dmax=None, bounded=False):
    """Normalized chain complex in degrees ``0..dmax``.

    Degenerate faces are dropped. ``bounded`` records that the caller knows
    there are no nondegenerate simplices above ``dmax``; otherwise the top
    degree is a truncation and only degrees below it are trustworthy.
    """
    dmax = X.dmax if dmax is None else dmax
    if dmax > X.dmax:
        raise TruncationError(f"simplices stored up to {X.dmax}, need {dmax}")
    bases = [X.nondegenerate(n) for n in range(dmax + 1)]
    diffs = [None]
    for n in range(1, dmax + 1):
        row = {x: k for k, x in enumerate(bases[n - 1])}
        cols = {}
        for c, x in enumerate(bases[n]):
            col = {}
            for i in range(n + 1):
                r = row.get(X.face(n, i, x))
                if r is not None:
                    col[r] = col.get(r, 0) + (-1) ** i
            col = {r: v for r, v in col.items() if v}
            if col:
                cols[c] = col
        diffs.append(SparseIntMatrix(len(bases[n - 1]), len(bases[n]), cols))
    return ChainComplexZ([len(b) for b in bases], diffs, bounded=bounded, labels=bases)


class BiSimplicialSet:
    """Doubly graded simplices ``X_{p,q}`` produced on demand.

    ``cells(p, q)`` lists ``X_{p,q}``; ``hface``/``hdeg`` act on ``p`` and
    ``vface``/``vdeg`` on ``q``, each with signature ``(p, q, i, x)``.
    """

    def __init__(self, cells, hface, vface, hdeg, vdeg, pmax, qmax):
        self._cells_fn = cells
        self._cache = {}
        self.hface, self.vface, self.hdeg, self.vdeg = hface, vface, hdeg, vdeg
        self.pmax, self.qmax = pmax, qmax

    def cells(self, p, q):
        if not (0 <= p <= self.pmax and 0 <= q <= self.qmax):
            raise TruncationError(f"X_{p},{q} is outside the stored range")
        if (p, q) not in self._cache:
            self._cache[(p, q)] = list(self._cells_fn(p, q))
        return self._cache[(p, q)]

    def h_degenerate(self, p, q, x):
        return p > 0 and any(self.hdeg(p - 1, q, i, self.hface(p, q, i, x)) == x for i in range(p))

    def v_degenerate(self, p, q, x):
        return q > 0 and any(self.vdeg(p, q - 1, j, self.vface(p, q, j, x)) == x for j in range(q))


def check_bisimplicial_identities(X, pmax=None, qmax=None):
    """Both directions simplicial, and horizontal maps commute with vertical ones."""
    pmax = X.pmax if pmax is None else pmax
    qmax = X.qmax if qmax is None else qmax
    problems = []
    for q in range(qmax + 1):
        row = SimplicialSet([X.cells(p, q) for p in range(pmax + 1)],
                            lambda n, i, x, q=q: X.hface(n, q, i, x),
                            lambda n, i, x, q=q: X.hdeg(n, q, i, x))
        problems += [f"row q={q}: {m}" for m in check_simplicial_identities(row)]
    for p in range(pmax + 1):
        col = SimplicialSet([X.cells(p, q) for q in range(qmax + 1)],
                            lambda n, i, x, p=p: X.vface(p, n, i, x),
                            lambda n, i, x, p=p: X.vdeg(p, n, i, x))
        problems += [f"column p={p}: {m}" for m in check_simplicial_identities(col)]
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            for x in X.cells(p, q):
                for i in range(p + 1):
                    for j in range(q + 1):
                        if p and q and X.vface(p - 1, q, j, X.hface(p, q, i, x)) != \
                                X.hface(p, q - 1, i, X.vface(p, q, j, x)):
                            problems.append(f"d^h_{i} d^v_{j} do not commute on {x!r}")
                        if p < pmax and q < qmax and X.vdeg(p + 1, q, j, X.hdeg(p, q, i, x)) != \
                                X.hdeg(p, q + 1, i, X.vdeg(p, q, j, x)):
                            problems.append(f"s^h_{i} s^v_{j} do not commute on {x!r}")
    return problems


def diagonal(X):
    """``n -> X_{n,n}`` with ``d_i = d^v_i d^h_i`` and ``s_i = s^v_i s^h_i``."""
    if X.pmax != X.qmax:
        raise TruncationError(f"diagonal needs pmax == qmax, got {X.pmax} and {X.qmax}")

    def face(n, i, x):
        return X.vface(n - 1, n, i, X.hface(n, n, i, x))

    def degeneracy(n, i, x):
        return X.vdeg(n + 1, n, i, X.hdeg(n, n, i, x))

    return SimplicialSet([X.cells(n, n) for n in range(X.pmax + 1)], face, degeneracy)


def total_complex(X, dmax, bounded=False):
    """Total complex of the doubly normalized double complex, degrees ``0..dmax``.

    Basis in degree ``n``: cells of bidegree ``(p, n-p)`` degenerate in
    neither direction. ``d = d_h + (-1)^p d_v``.
    """
    if dmax > min(X.pmax, X.qmax):
        raise TruncationError(f"need X up to ({dmax}, {dmax})")
    bases, where = [], []
    for n in range(dmax + 1):
        basis = []
        for p in range(n + 1):
            q = n - p
            basis += [(p, x) for x in X.cells(p, q)
                      if not X.h_degenerate(p, q, x) and not X.v_degenerate(p, q, x)]
        bases.append(basis)
        where.append({b: k for k, b in enumerate(basis)})
    diffs = [None]
    for n in range(1, dmax + 1):
        cols = {}
        for c, (p, x) in enumerate(bases[n]):
            q = n - p
            col = {}
            terms = [((p - 1, X.hface(p, q, i, x)), (-1) ** i) for i in range(p + 1)] if p else []
            if q:
                sign = (-1) ** p
                terms += [((p, X.vface(p, q, j, x)), sign * (-1) ** j) for j in range(q + 1)]
            for key, v in terms:
                r = where[n - 1].get(key)
                if r is not None:
                    col[r] = col.get(r, 0) + v
            col = {r: v for r, v in col.items() if v}
            if col:
                cols[c] = col
        diffs.append(SparseIntMatrix(len(bases[n - 1]), len(bases[n]), cols))
    return ChainComplexZ([len(b) for b in bases], diffs, bounded=bounded, labels=bases)
