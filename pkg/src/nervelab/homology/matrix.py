"""Sparse integer matrices and exact dense routines (rank, Smith form)."""

from math import gcd


class SparseIntMatrix:
    """Integer matrix stored column-wise as ``{col: {row: value}}``.

    Values are Python ints; zero entries are never stored.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = {}
        if cols:
            for c, col in cols.items():
                col = {r: v for r, v in col.items() if v}
                if col:
                    self.cols[c] = col

    @classmethod
    def from_triples(cls, nrows, ncols, triples):
        m = cls(nrows, ncols)
        for r, c, v in triples:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            col = m.cols.setdefault(c, {})
            nv = col.get(r, 0) + v
            if nv:
                col[r] = nv
            else:
                col.pop(r, None)
                if not col:
                    del m.cols[c]
        return m

    @classmethod
    def from_dense(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls.from_triples(
            nrows, ncols,
            ((i, j, v) for i, row in enumerate(rows) for j, v in enumerate(row) if v),
        )

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def triples(self):
        for c in sorted(self.cols):
            col = self.cols[c]
            for r in sorted(col):
                yield (r, c, col[r])

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.triples():
            out[r][c] = v
        return out

    def column(self, c):
        return dict(self.cols.get(c, {}))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = {}
        for j, bcol in other.cols.items():
            acc = {}
            for k, bv in bcol.items():
                acol = self.cols.get(k)
                if not acol:
                    continue
                for i, av in acol.items():
                    acc[i] = acc.get(i, 0) + av * bv
            acc = {i: v for i, v in acc.items() if v}
            if acc:
                out[j] = acc
        return SparseIntMatrix(self.nrows, other.ncols, out)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return SparseIntMatrix.from_triples(
            self.nrows, self.ncols, list(self.triples()) + list(other.triples())
        )

    def __neg__(self):
        return SparseIntMatrix(
            self.nrows, self.ncols,
            {c: {r: -v for r, v in col.items()} for c, col in self.cols.items()},
        )

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __repr__(self):
        return f"SparseIntMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def rank_bareiss(rows):
    """Exact rank of a dense integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n):
        pivot = None
        for i in range(rank, m):
            if a[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            f = a[i][col]
            row_i = a[i]
            row_r = a[rank]
            for j in range(col + 1, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _normalize_diagonal(diag):
    """Turn any diagonal of an equivalent matrix into invariant factors."""
    d = sorted(abs(x) for x in diag if x)
    k = len(d)
    for i in range(k):
        for j in range(i + 1, k):
            g = gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def smith_normal_form(rows):
    """Invariant factors of a dense integer matrix (nonzero ones, ascending).

    >>> smith_normal_form([[2, 0], [0, 3]])
    [1, 6]
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            moved = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if not moved:
                break
        diag.append(a[t][t])
        t += 1
    return _normalize_diagonal(diag)
