"""Augmented directed complexes in the sense of Steiner.

A directed complex here is a bounded chain complex of free abelian groups with
a chosen ordered basis in each degree, an augmentation, and the positivity
convention "nonnegative coefficients in the basis". The main instances are the
linearized orientals: the normalized chains of the simplex, with basis the
strictly increasing tuples.
"""

import re
from dataclasses import dataclass
from itertools import combinations

from .homology import ChainComplexZ, SparseIntMatrix


@dataclass(frozen=True, eq=False)
class DirectedComplex:
    basis: tuple          # basis[p] = tuple of labels in degree p
    diff: tuple           # diff[p]: C_p -> C_{p-1}, diff[0] is None
    aug: tuple            # augmentation row vector on degree 0

    @property
    def top_degree(self):
        return len(self.basis) - 1

    def rank(self, p):
        return len(self.basis[p]) if 0 <= p <= self.top_degree else 0

    def index(self, p, label):
        return self._index(p)[label]

    def _index(self, p):
        cache = self.__dict__.setdefault("_idx", {})
        if p not in cache:
            cache[p] = {x: i for i, x in enumerate(self.basis[p])}
        return cache[p]

    def d(self, p):
        if 1 <= p <= self.top_degree:
            return self.diff[p]
        return SparseIntMatrix(self.rank(p - 1), self.rank(p))

    def boundary(self, p, label):
        """``d(label)`` as a dict ``{label: coefficient}``."""
        col = self.d(p).column(self.index(p, label))
        return {self.basis[p - 1][r]: v for r, v in sorted(col.items())}

    def chain_complex(self):
        return ChainComplexZ(
            [self.rank(p) for p in range(self.top_degree + 1)],
            [None] + [self.diff[p] for p in range(1, self.top_degree + 1)],
            bounded=True,
        )


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: DirectedComplex
    target: DirectedComplex
    maps: tuple           # maps[p]: source_p -> target_p

    def __call__(self, p, label):
        col = self.maps[p].column(self.source.index(p, label))
        return {self.target.basis[p][r]: v for r, v in sorted(col.items())}


@dataclass(frozen=True, eq=False)
class ChainHomotopy:
    source_map: ChainMap
    target_map: ChainMap
    h: tuple              # h[p]: C_p -> C'_{p+1}

    def __call__(self, p, label):
        col = self.h[p].column(self.source_map.source.index(p, label))
        return {self.source_map.target.basis[p + 1][r]: v for r, v in sorted(col.items())}


class DimensionMismatch(ValueError):
    pass


def _matrix(src_basis, tgt_basis, rule):
    """Matrix whose column for ``x`` is ``rule(x)`` (a ``{label: coeff}`` dict)."""
    tidx = {y: i for i, y in enumerate(tgt_basis)}
    cols = {}
    for j, x in enumerate(src_basis):
        col = {}
        for y, c in rule(x).items():
            i = tidx[y]
            col[i] = col.get(i, 0) + c
        cols[j] = col
    return SparseIntMatrix(len(tgt_basis), len(src_basis), cols)


# orientals -----------------------------------------------------------------

def oriental_complex(n):
    """The linearized ``n``-th oriental: normalized chains of the ``n``-simplex."""
    if n < 0:
        raise ValueError("n must be >= 0")
    basis = tuple(tuple(combinations(range(n + 1), p + 1)) for p in range(n + 1))

    def face_sum(x):
        out = {}
        for l in range(len(x)):
            y = x[:l] + x[l + 1:]
            out[y] = out.get(y, 0) + (-1) ** l
        return out

    diff = (None,) + tuple(
        _matrix(basis[p], basis[p - 1], face_sum) for p in range(1, n + 1)
    )
    return DirectedComplex(basis, diff, (1,) * (n + 1))


def identity_map(K):
    maps = tuple(
        SparseIntMatrix(K.rank(p), K.rank(p), {i: {i: 1} for i in range(K.rank(p))})
        for p in range(K.top_degree + 1)
    )
    return ChainMap(K, K, maps)


def zero_homotopy(f):
    K, L = f.source, f.target
    h = tuple(SparseIntMatrix(L.rank(p + 1), K.rank(p)) for p in range(K.top_degree + 1))
    return ChainHomotopy(f, f, h)


def _consecutive_edges(i0, i1):
    return {(k - 1, k): 1 for k in range(i0 + 1, i1 + 1)}


def retraction_sr(n):
    """Endomorphism of the ``n``-th oriental induced by ``O_n -> Delta_n -> O_n``.

    Objects are fixed, an edge ``(i0, i1)`` goes to the path of consecutive
    edges from ``i0`` to ``i1``, and every cell of dimension >= 2 goes to an
    identity, i.e. to zero in the complex.
    """
    K = oriental_complex(n)

    def rule(p):
        if p == 0:
            return lambda x: {x: 1}
        if p == 1:
            return lambda x: _consecutive_edges(*x)
        return lambda x: {}

    maps = tuple(_matrix(K.basis[p], K.basis[p], rule(p)) for p in range(n + 1))
    return ChainMap(K, K, maps)


def homotopy_h(n):
    """Positive homotopy from the identity to ``retraction_sr(n)``.

    ``h(i0) = 0`` and ``h(i0, ..., ip) = sum over i0 < k < i1 of
    (k-1, k, i1, ..., ip)``.
    """
    K = oriental_complex(n)
    ident = identity_map(K)
    sr = retraction_sr(n)

    def rule(x):
        if len(x) == 1:
            return {}
        return {(k - 1, k) + x[1:]: 1 for k in range(x[0] + 1, x[1])}

    h = tuple(
        _matrix(K.basis[p], K.basis[p + 1] if p < n else (), rule)
        for p in range(n + 1)
    )
    return ChainHomotopy(ident, sr, h)


def line_complex(n):
    """Linearization of the poset ``0 < 1 < ... < n`` as a free 1-category."""
    basis = (tuple((i,) for i in range(n + 1)), tuple((k - 1, k) for k in range(1, n + 1)))
    if n == 0:
        basis = basis[:1]
    diff = (None,) + tuple(
        _matrix(basis[1], basis[0], lambda e: {(e[1],): 1, (e[0],): -1}) for _ in basis[1:]
    )
    return DirectedComplex(basis, diff, (1,) * (n + 1))


def section_s(n):
    """Inclusion of the linearized poset into the linearized oriental."""
    L, K = line_complex(n), oriental_complex(n)
    maps = tuple(_matrix(L.basis[p], K.basis[p], lambda x: {x: 1}) for p in range(L.top_degree + 1))
    maps += tuple(SparseIntMatrix(K.rank(p), 0) for p in range(L.top_degree + 1, n + 1))
    return ChainMap(L, K, maps)


def retraction_r(n):
    """Linearization of the truncation ``O_n -> Delta_n``."""
    K, L = oriental_complex(n), line_complex(n)
    maps = [_matrix(K.basis[0], L.basis[0], lambda x: {x: 1})]
    if n >= 1:
        maps.append(_matrix(K.basis[1], L.basis[1], lambda x: _consecutive_edges(*x)))
    maps += [SparseIntMatrix(0, K.rank(p)) for p in range(2, n + 1)]
    return ChainMap(K, L, tuple(maps))


def compose_maps(g, f):
    """``g o f``."""
    top = f.source.top_degree
    maps = []
    for p in range(top + 1):
        gp = g.maps[p] if p < len(g.maps) else SparseIntMatrix(g.target.rank(p), g.source.rank(p))
        maps.append(gp @ f.maps[p])
    return ChainMap(f.source, g.target, tuple(maps))


def maps_equal(f, g):
    return all(a == b for a, b in zip(f.maps, g.maps)) and len(f.maps) == len(g.maps)


# validation ----------------------------------------------------------------

def validate(K):
    """List of violated invariants (empty when ``K`` is a valid complex)."""
    problems = []
    for p, labels in enumerate(K.basis):
        if len(set(labels)) != len(labels):
            problems.append(f"duplicate basis label in degree {p}")
    for p in range(1, K.top_degree + 1):
        if K.diff[p].shape != (K.rank(p - 1), K.rank(p)):
            problems.append(f"diff[{p}] has shape {K.diff[p].shape}")
    if problems:
        return problems
    for p in range(2, K.top_degree + 1):
        if not (K.diff[p - 1] @ K.diff[p]).is_zero():
            problems.append(f"d∘d ≠ 0 in degree {p}")
    if len(K.aug) != K.rank(0):
        problems.append("augmentation length differs from rank of degree 0")
    elif K.top_degree >= 1:
        aug = SparseIntMatrix(1, K.rank(0), {j: {0: v} for j, v in enumerate(K.aug)})
        if not (aug @ K.diff[1]).is_zero():
            problems.append("augmentation violation: e∘d ≠ 0")
    return problems


def validate_map(f):
    """List of violated chain-map invariants."""
    K, L = f.source, f.target
    problems = []
    for p in range(K.top_degree + 1):
        if f.maps[p].shape != (L.rank(p), K.rank(p)):
            problems.append(f"maps[{p}] has shape {f.maps[p].shape}")
    if problems:
        return problems
    for p in range(1, K.top_degree + 1):
        if L.d(p) @ f.maps[p] != f.maps[p - 1] @ K.diff[p]:
            problems.append(f"does not commute with d in degree {p}")
    e_src = SparseIntMatrix(1, K.rank(0), {j: {0: v} for j, v in enumerate(K.aug)})
    e_tgt = SparseIntMatrix(1, L.rank(0), {j: {0: v} for j, v in enumerate(L.aug)})
    if e_tgt @ f.maps[0] != e_src:
        problems.append("does not preserve the augmentation")
    for p, m in enumerate(f.maps):
        if any(v < 0 for _, _, v in m.triples()):
            problems.append(f"not positive in degree {p}")
    return problems


@dataclass
class HomotopyCheck:
    ok: bool
    degree: int = None
    element: tuple = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def verify_homotopy(hom):
    """Check ``d h + h d = target_map - source_map`` and positivity of ``h``.

    Returns a ``HomotopyCheck``; on failure it names the first basis element
    (in degree order, then basis order) where something breaks.
    """
    f, g = hom.source_map, hom.target_map
    K, L = f.source, f.target
    if g.source is not K and g.source.basis != K.basis:
        raise DimensionMismatch("homotopy endpoints have different sources")
    if g.target is not L and g.target.basis != L.basis:
        raise DimensionMismatch("homotopy endpoints have different targets")
    if len(hom.h) != K.top_degree + 1:
        raise DimensionMismatch(f"need {K.top_degree + 1} homotopy components, got {len(hom.h)}")
    for p in range(K.top_degree + 1):
        if hom.h[p].shape != (L.rank(p + 1), K.rank(p)):
            raise DimensionMismatch(f"h[{p}] has shape {hom.h[p].shape}")
        if f.maps[p].shape != g.maps[p].shape:
            raise DimensionMismatch(f"endpoint maps differ in shape in degree {p}")

    for p in range(K.top_degree + 1):
        lhs = L.d(p + 1) @ hom.h[p]
        if p >= 1:
            lhs = lhs + hom.h[p - 1] @ K.diff[p]
        rhs = g.maps[p] - f.maps[p]
        for j, x in enumerate(K.basis[p]):
            if lhs.cols.get(j, {}) != rhs.cols.get(j, {}):
                return HomotopyCheck(False, p, x, "dh + hd != g - f")
            if any(v < 0 for v in hom.h[p].cols.get(j, {}).values()):
                return HomotopyCheck(False, p, x, "h is not positive")
    return HomotopyCheck(True)


def perturb_homotopy(hom, degree, row, col, delta=1):
    """Copy of ``hom`` with one matrix entry of ``h[degree]`` shifted by ``delta``."""
    h = list(hom.h)
    m = h[degree]
    h[degree] = m + SparseIntMatrix.from_triples(m.nrows, m.ncols, [(row, col, delta)])
    return ChainHomotopy(hom.source_map, hom.target_map, tuple(h))


# tensor product ------------------------------------------------------------

def tensor(K, L):
    """Chain-level tensor product with the Koszul sign.

    ``d(x ⊗ y) = dx ⊗ y + (-1)^|x| x ⊗ dy``; the augmentation is the product
    of augmentations.
    """
    top = K.top_degree + L.top_degree
    basis = []
    for p in range(top + 1):
        basis.append(tuple(
            (x, y)
            for a in range(max(0, p - L.top_degree), min(p, K.top_degree) + 1)
            for x in K.basis[a]
            for y in L.basis[p - a]
        ))
    deg_k = {x: a for a in range(K.top_degree + 1) for x in K.basis[a]}
    deg_l = {y: b for b in range(L.top_degree + 1) for y in L.basis[b]}

    def rule(xy):
        x, y = xy
        a, b = deg_k[x], deg_l[y]
        out = {}
        if a >= 1:
            for x2, c in K.boundary(a, x).items():
                out[(x2, y)] = out.get((x2, y), 0) + c
        if b >= 1:
            sign = -1 if a % 2 else 1
            for y2, c in L.boundary(b, y).items():
                out[(x, y2)] = out.get((x, y2), 0) + sign * c
        return out

    diff = (None,) + tuple(_matrix(basis[p], basis[p - 1], rule) for p in range(1, top + 1))
    ka = dict(zip(K.basis[0], K.aug))
    la = dict(zip(L.basis[0], L.aug))
    aug = tuple(ka[x] * la[y] for x, y in basis[0])
    return DirectedComplex(tuple(basis), diff, aug)


# text dump -----------------------------------------------------------------

def _fmt_label(x):
    if isinstance(x, tuple) and all(isinstance(i, int) for i in x):
        return "(" + ",".join(map(str, x)) + ")"
    return repr(x)


def dump(K):
    """Line-oriented text form: basis lines ``p: (i0,...,ip)`` then ``d(x) = ...``."""
    lines = [f"{p}: {_fmt_label(x)}" for p in range(K.top_degree + 1) for x in K.basis[p]]
    for p in range(1, K.top_degree + 1):
        for x in K.basis[p]:
            terms = K.boundary(p, x)
            rhs = " ".join(
                f"{'+' if c > 0 else '-'} {abs(c)}·{_fmt_label(y)}" for y, c in terms.items()
            )
            lines.append(f"d{_fmt_label(x)} = {rhs or '0'}")
    return "\n".join(lines) + "\n"


_BASIS_RE = re.compile(r"^\s*(\d+)\s*:\s*\(([\d,\s]*)\)\s*$")
_DIFF_RE = re.compile(r"^\s*d\s*\(([\d,\s]*)\)\s*=\s*(.*)$")
_TERM_RE = re.compile(r"([+-])\s*(\d+)\s*[·*]\s*\(([\d,\s]*)\)")


def _parse_tuple(s):
    s = s.strip()
    return tuple(int(t) for t in s.split(",")) if s else ()


def parse_dump(text):
    """Inverse of ``dump`` for integer-tuple labels (augmentation: all ones)."""
    basis = {}
    bdry = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _BASIS_RE.match(line)
        if m:
            basis.setdefault(int(m.group(1)), []).append(_parse_tuple(m.group(2)))
            continue
        m = _DIFF_RE.match(line)
        if m:
            x = _parse_tuple(m.group(1))
            rhs = m.group(2).strip()
            terms = {}
            if rhs != "0":
                pos = 0
                for t in _TERM_RE.finditer(rhs):
                    if rhs[pos:t.start()].strip():
                        raise ValueError(f"line {lineno}: cannot parse {rhs!r}")
                    c = int(t.group(2)) * (1 if t.group(1) == "+" else -1)
                    y = _parse_tuple(t.group(3))
                    terms[y] = terms.get(y, 0) + c
                    pos = t.end()
                if rhs[pos:].strip():
                    raise ValueError(f"line {lineno}: cannot parse {rhs!r}")
            bdry[x] = terms
            continue
        raise ValueError(f"line {lineno}: unrecognized {line!r}")
    top = max(basis) if basis else -1
    if sorted(basis) != list(range(top + 1)):
        raise ValueError("basis degrees must be contiguous from 0")
    B = tuple(tuple(basis[p]) for p in range(top + 1))
    diff = (None,) + tuple(
        _matrix(B[p], B[p - 1], lambda x: bdry.get(x, {})) for p in range(1, top + 1)
    )
    return DirectedComplex(B, diff, (1,) * len(B[0]) if B else ())
