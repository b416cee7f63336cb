"""Joyal's cell category Theta, built as iterated wreath products of Delta.

An object is a planar rooted tree: a node of width ``n`` with ``n`` ordered
children. The leaf (width 0) is the point ``Δ0``, at every level; this single
representation realizes the inclusions Theta_n ⊂ Theta_{n+1}. A node whose
children are all leaves is ``Δn``.

A morphism ``(Δn; S_1..S_n) -> (Δn'; T_1..T_n')`` is a monotone map
``phi: [n] -> [n']`` together with a child morphism ``S_i -> T_i'`` for every
``i`` and every ``i'`` with ``phi(i-1) < i' <= phi(i)``.
"""

import random
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, product


@dataclass(frozen=True)
class ThetaObject:
    children: tuple = ()

    @property
    def width(self):
        return len(self.children)

    @property
    def depth(self):
        if not self.children:
            return 0
        return 1 + max(c.depth for c in self.children)

    def __str__(self):
        return format_theta(self)

    def __repr__(self):
        return f"ThetaObject({format_theta(self)})"


POINT = ThetaObject()


def delta(n):
    """``Δn`` as a Theta object (depth 1 for ``n >= 1``)."""
    return ThetaObject((POINT,) * n)


def node(*children):
    """``(Δn; c_1, ..., c_n)``; integers stand for ``Δk``."""
    return ThetaObject(tuple(delta(c) if isinstance(c, int) else c for c in children))


@dataclass(frozen=True)
class SimplexMap:
    """Weakly increasing map ``[source_n] -> [target_n]``."""

    source_n: int
    target_n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.source_n + 1:
            raise ValueError(f"need {self.source_n + 1} values, got {len(self.values)}")
        if any(not 0 <= v <= self.target_n for v in self.values):
            raise ValueError(f"values {self.values} outside [0, {self.target_n}]")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"values {self.values} are not weakly increasing")

    def __call__(self, i):
        return self.values[i]

    def then(self, other):
        """``other o self``."""
        if self.target_n != other.source_n:
            raise ValueError("simplex maps are not composable")
        return SimplexMap(self.source_n, other.target_n, tuple(other.values[v] for v in self.values))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(range(n + 1)))

    @classmethod
    def all(cls, n, m):
        for vals in combinations_with_replacement(range(m + 1), n + 1):
            yield cls(n, m, vals)


def index_family(phi):
    """Pairs ``(i, i')`` with ``1 <= i <= n`` and ``phi(i-1) < i' <= phi(i)``."""
    return [(i, ip) for i in range(1, phi.source_n + 1)
            for ip in range(phi(i - 1) + 1, phi(i) + 1)]


class ThetaError(ValueError):
    pass


@dataclass(frozen=True)
class ThetaMorphism:
    source: ThetaObject
    target: ThetaObject
    phi: SimplexMap
    children: tuple       # sorted ((i, i'), ThetaMorphism) pairs

    def __post_init__(self):
        if (self.phi.source_n, self.phi.target_n) != (self.source.width, self.target.width):
            raise ThetaError("phi does not match the node widths")
        keys = [k for k, _ in self.children]
        if keys != index_family(self.phi):
            raise ThetaError(f"child index family {keys} != {index_family(self.phi)}")
        for (i, ip), f in self.children:
            if f.source != self.source.children[i - 1] or f.target != self.target.children[ip - 1]:
                raise ThetaError(f"child ({i}, {ip}) has wrong endpoints")

    def child(self, i, ip):
        return dict(self.children)[(i, ip)]


def morphism(source, target, phi, children=None):
    """Build a morphism; ``phi`` may be a tuple of values, ``children`` a dict."""
    if not isinstance(phi, SimplexMap):
        phi = SimplexMap(source.width, target.width, tuple(phi))
    children = children or {}
    return ThetaMorphism(source, target, phi, tuple(sorted(children.items())))


def identity(S):
    return ThetaMorphism(
        S, S, SimplexMap.identity(S.width),
        tuple(((i, i), identity(c)) for i, c in enumerate(S.children, 1)),
    )


def compose(g, f):
    """``g o f``: phi's compose and children compose along the unique middle index."""
    if f.target != g.source:
        raise ThetaError("endpoint mismatch: f.target != g.source")
    phi = f.phi.then(g.phi)
    fc, gc = dict(f.children), dict(g.children)
    children = []
    for i, ipp in index_family(phi):
        # unique i' with phi(i-1) < i' <= phi(i) and phi'(i'-1) < i'' <= phi'(i')
        mids = [ip for ip in range(f.phi(i - 1) + 1, f.phi(i) + 1)
                if g.phi(ip - 1) < ipp <= g.phi(ip)]
        assert len(mids) == 1, mids
        ip = mids[0]
        children.append(((i, ipp), compose(gc[(ip, ipp)], fc[(i, ip)])))
    return ThetaMorphism(f.source, g.target, phi, tuple(children))


def hom(S, T):
    """All morphisms ``S -> T`` (exhaustive; keep the inputs small)."""
    for phi in SimplexMap.all(S.width, T.width):
        fam = index_family(phi)
        choices = [list(hom(S.children[i - 1], T.children[ip - 1])) for i, ip in fam]
        for picks in product(*choices):
            yield ThetaMorphism(S, T, phi, tuple(zip(fam, picks)))


def count_hom(S, T):
    total = 0
    for phi in SimplexMap.all(S.width, T.width):
        k = 1
        for i, ip in index_family(phi):
            k *= count_hom(S.children[i - 1], T.children[ip - 1])
            if not k:
                break
        total += k
    return total


# the functors Sigma, pi, mu, m_n ------------------------------------------

def sigma(c):
    return ThetaObject((c,))


def sigma_map(f):
    return ThetaMorphism(sigma(f.source), sigma(f.target), SimplexMap.identity(1), (((1, 1), f),))


def pi_map(f):
    return f.phi


def mu(n, c):
    """``(Δn, c) -> (Δn; c, ..., c)``."""
    return ThetaObject((c,) * n)


def mu_map(phi, f):
    """``(phi, f) -> (phi; (f)_{i', i})``."""
    return ThetaMorphism(
        mu(phi.source_n, f.source), mu(phi.target_n, f.target), phi,
        tuple((k, f) for k in index_family(phi)),
    )


def m_n(*ps):
    """``m_n(p_1, ..., p_n) = (Δp_1; m_{n-1}(p_2, ...), ...)``."""
    if not ps:
        return POINT
    return mu(ps[0], m_n(*ps[1:]))


def m_n_map(*phis):
    """Image of a tuple of monotone maps under ``m_n``."""
    if not phis:
        return identity(POINT)
    return mu_map(phis[0], m_n_map(*phis[1:]))


# invariants ----------------------------------------------------------------

def generator_counts(S):
    """Number of k-dimensional generators of the realization of ``S``."""
    if not S.children:
        return [1]
    out = [S.width + 1]
    # child k-generators become (k+1)-generators between consecutive objects
    for c in S.children:
        for k, v in enumerate(generator_counts(c), 1):
            if k == len(out):
                out.append(0)
            out[k] += v
    return out


def theta_dual(S, J):
    """The object ``D_J(S)``: children reversed iff ``1 in J``, recursing with ``J - 1``."""
    J = frozenset(J)
    K = frozenset(j - 1 for j in J if j > 1)
    kids = tuple(theta_dual(c, K) for c in S.children)
    if 1 in J:
        kids = kids[::-1]
    return ThetaObject(kids)


# text notation -------------------------------------------------------------

def format_theta(S):
    if all(not c.children for c in S.children):
        return f"Δ{S.width}"
    return f"(Δ{S.width}; " + ", ".join(format_theta(c) for c in S.children) + ")"


_TOKEN = re.compile(r"\s*(?:(Δ|D|Delta)\s*(\d+)|([();,]))")


def parse_theta(text):
    """Parse ``(Δn; c1, ..., cn)`` notation; ``D`` or ``Delta`` may replace ``Δ``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ThetaError(f"unexpected input at {pos}: {text[pos:]!r}")
        tokens.append(("D", int(m.group(2))) if m.group(2) is not None else (m.group(3), None))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    tokens.append(("END", None))
    k = 0

    def expect(kind):
        nonlocal k
        if tokens[k][0] != kind:
            raise ThetaError(f"expected {kind!r}, got {tokens[k][0]!r}")
        k += 1
        return tokens[k - 1][1]

    def parse():
        nonlocal k
        if tokens[k][0] == "D":
            return delta(expect("D"))
        expect("(")
        n = expect("D")
        kids = []
        if tokens[k][0] == ";":
            k += 1
            kids.append(parse())
            while tokens[k][0] == ",":
                k += 1
                kids.append(parse())
        expect(")")
        if len(kids) != n:
            raise ThetaError(f"Δ{n} needs {n} children, got {len(kids)}")
        return ThetaObject(tuple(kids))

    S = parse()
    expect("END")
    return S


def morphism_to_json(f):
    return {
        "source": format_theta(f.source),
        "target": format_theta(f.target),
        "phi": list(f.phi.values),
        "children": [{"index": [i, ip], "map": morphism_to_json(c)} for (i, ip), c in f.children],
    }


def morphism_from_json(data):
    S, T = parse_theta(data["source"]), parse_theta(data["target"])
    children = {tuple(e["index"]): morphism_from_json(e["map"]) for e in data.get("children", [])}
    return morphism(S, T, tuple(data["phi"]), children)


# enumeration helpers -------------------------------------------------------

def theta_objects(max_width, max_depth):
    """All objects with every node of width <= max_width and depth <= max_depth."""
    if max_depth == 0:
        return [POINT]
    smaller = theta_objects(max_width, max_depth - 1)
    out = []
    for n in range(max_width + 1):
        out.extend(ThetaObject(kids) for kids in product(smaller, repeat=n))
    return out


def random_theta(rng, max_width=3, max_depth=3):
    """Random object; widths uniform in ``0..max_width``."""
    if max_depth == 0:
        return POINT
    n = rng.randint(0, max_width)
    return ThetaObject(tuple(random_theta(rng, max_width, max_depth - 1) for _ in range(n)))


def random_morphism(rng, S, T):
    phi = SimplexMap(S.width, T.width,
                     tuple(sorted(rng.randint(0, T.width) for _ in range(S.width + 1))))
    return ThetaMorphism(S, T, phi, tuple(
        ((i, ip), random_morphism(rng, S.children[i - 1], T.children[ip - 1]))
        for i, ip in index_family(phi)
    ))


def default_rng(seed=0):
    return random.Random(seed)
