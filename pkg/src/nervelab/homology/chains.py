"""Chain complexes of free abelian groups and their integral homology."""

import json
from dataclasses import dataclass, field

from .kernel import unit_eliminate
from .matrix import SparseIntMatrix, rank_bareiss, smith_normal_form

CHAINS_FORMAT = "nervelab-chains/1"


class ChainComplexError(ValueError):
    pass


@dataclass
class ChainComplexZ:
    """Chain complex ``C_top -> ... -> C_0`` of free abelian groups.

    ``diffs[p]`` (for ``1 <= p <= top``) is the matrix of ``d_p: C_p -> C_{p-1}``
    of shape ``(ranks[p-1], ranks[p])``; ``diffs[0]`` is unused and kept as
    ``None``. ``bounded`` certifies that the complex is genuinely zero above
    ``top`` (otherwise the top degree is a truncation and its homology is not
    trustworthy).
    """

    ranks: list
    diffs: list
    bounded: bool = False
    labels: list = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.diffs) != len(self.ranks):
            raise ChainComplexError("need one differential slot per degree")
        for p in range(1, len(self.ranks)):
            d = self.diffs[p]
            if d.shape != (self.ranks[p - 1], self.ranks[p]):
                raise ChainComplexError(
                    f"d_{p} has shape {d.shape}, expected "
                    f"{(self.ranks[p - 1], self.ranks[p])}"
                )

    @property
    def top(self):
        return len(self.ranks) - 1

    def d(self, p):
        """Differential out of degree ``p`` (zero matrix outside the range)."""
        if 1 <= p <= self.top:
            return self.diffs[p]
        src = self.ranks[p] if 0 <= p <= self.top else 0
        tgt = self.ranks[p - 1] if 0 <= p - 1 <= self.top else 0
        return SparseIntMatrix(tgt, src)

    def check_dd(self):
        """Degrees ``p`` where ``d_{p-1} d_p`` is nonzero."""
        return [p for p in range(2, self.top + 1)
                if not (self.diffs[p - 1] @ self.diffs[p]).is_zero()]

    def euler_characteristic(self, upto=None):
        upto = self.top if upto is None else upto
        return sum((-1) ** p * self.ranks[p] for p in range(upto + 1))

    @classmethod
    def zero(cls, top=0):
        return cls([0] * (top + 1), [None] + [SparseIntMatrix(0, 0)] * top, bounded=True)

    # serialization ---------------------------------------------------------

    def to_json(self):
        return {
            "format": CHAINS_FORMAT,
            "ranks": list(self.ranks),
            "bounded": self.bounded,
            "differentials": [
                {
                    "degree": p,
                    "shape": list(self.diffs[p].shape),
                    "entries": [list(t) for t in self.diffs[p].triples()],
                }
                for p in range(1, self.top + 1)
            ],
        }

    @classmethod
    def from_json(cls, data):
        if data.get("format") != CHAINS_FORMAT:
            raise ChainComplexError(f"not a {CHAINS_FORMAT} document")
        ranks = list(data["ranks"])
        diffs = [None] * len(ranks)
        for entry in data["differentials"]:
            p = entry["degree"]
            nrows, ncols = entry["shape"]
            diffs[p] = SparseIntMatrix.from_triples(nrows, ncols, map(tuple, entry["entries"]))
        for p in range(1, len(ranks)):
            if diffs[p] is None:
                diffs[p] = SparseIntMatrix(ranks[p - 1], ranks[p])
        return cls(ranks, diffs, bounded=bool(data.get("bounded", False)))

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


@dataclass
class HomologyResult:
    betti: list
    torsion: list
    valid_range: int

    def to_json(self):
        return {"betti": self.betti, "torsion": self.torsion, "valid_range": self.valid_range}


def invariant_factors(matrix, backend=None):
    """All nonzero invariant factors of a sparse integer matrix, ascending.

    Unit pivots are removed by the sparse kernel; whatever survives is small
    and goes through the dense Smith normal form.
    """
    npiv, rest = unit_eliminate(matrix.nrows, matrix.ncols, matrix.triples(), backend=backend)
    factors = [1] * npiv
    if rest:
        rmap = {r: i for i, r in enumerate(sorted({r for r, _, _ in rest}))}
        cmap = {c: j for j, c in enumerate(sorted({c for _, c, _ in rest}))}
        dense = [[0] * len(cmap) for _ in rmap]
        for r, c, v in rest:
            dense[rmap[r]][cmap[c]] = v
        factors.extend(smith_normal_form(dense))
    return sorted(factors)


def betti(cx, maxdim=None, check=True, backend=None):
    """Betti numbers and torsion of ``cx`` in degrees ``0..maxdim``.

    Ranks and torsion both come from the invariant factors of each
    differential. ``valid_range`` is the highest degree whose homology is
    exact: ``top`` for a bounded complex, ``top - 1`` otherwise.
    """
    if check:
        bad = cx.check_dd()
        if bad:
            raise ChainComplexError(f"d o d != 0 at degree(s) {bad}")
    top = cx.top
    valid = top if cx.bounded else top - 1
    maxdim = valid if maxdim is None else min(maxdim, top)
    factors = {}

    def facs(p):
        if p not in factors:
            factors[p] = invariant_factors(cx.d(p), backend) if 1 <= p <= top else []
        return factors[p]

    bettis, torsion = [], []
    for p in range(maxdim + 1):
        b = cx.ranks[p] - len(facs(p)) - len(facs(p + 1))
        bettis.append(b)
        torsion.append([f for f in facs(p + 1) if f > 1])
    return HomologyResult(bettis, torsion, min(valid, maxdim))


def betti_rational(cx, maxdim=None):
    """Rational Betti numbers from dense fraction-free ranks (oracle path)."""
    top = cx.top
    maxdim = (top if cx.bounded else top - 1) if maxdim is None else min(maxdim, top)

    def rk(p):
        if not 1 <= p <= top:
            return 0
        return rank_bareiss(cx.diffs[p].to_dense()) if cx.diffs[p].nnz() else 0

    return [cx.ranks[p] - rk(p) - rk(p + 1) for p in range(maxdim + 1)]


def is_point_homology(result):
    """Betti vector ``(1, 0, ..., 0)`` with no torsion within the valid range."""
    k = result.valid_range
    if k < 0:
        return False
    return (result.betti[0] == 1
            and all(b == 0 for b in result.betti[1:k + 1])
            and all(not t for t in result.torsion[:k + 1]))
