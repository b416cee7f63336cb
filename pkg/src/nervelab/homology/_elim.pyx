# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse unit-pivot elimination (int64 with overflow guard).

Same pivot rule as ``_pyelim.unit_eliminate``. Raises ``OverflowError`` when
an intermediate entry could leave the safe int64 range; callers fall back to
the arbitrary-precision Python kernel in that case.

Rows are column-sorted vectors, so a Schur update is a linear merge. Column
membership lists are lazy (stale row ids are filtered on use) while
``colcount`` stays exact, because the pivot rule ranks columns by size.
"""

from libcpp.vector cimport vector
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair
from libcpp.algorithm cimport sort as cpp_sort

ctypedef long long i64
ctypedef pair[int, int] key_t
ctypedef pair[int, i64] entry_t

cdef i64 LIMIT = 1 << 30


cdef i64 find_value(vector[entry_t]& row, int c):
    """Value at column ``c`` of a sorted row, 0 if absent."""
    cdef size_t lo = 0, hi = row.size(), mid
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid].first < c:
            lo = mid + 1
        else:
            hi = mid
    if lo < row.size() and row[lo].first == c:
        return row[lo].second
    return 0


def unit_eliminate(int nrows, int ncols, entries):
    cdef vector[vector[entry_t]] rows
    cdef vector[vector[int]] cols
    cdef vector[int] colcount
    cdef vector[char] alive
    cdef vector[int] stamp
    rows.resize(nrows)
    cols.resize(ncols)
    colcount.resize(ncols, 0)
    alive.resize(nrows, 1)
    stamp.resize(nrows, -1)
    cdef int r, c, pr, pc, best_c, best_n, n, step = 0
    cdef i64 v, nv, u, factor, a
    cdef size_t k, m, i, j

    for r, c, v in entries:
        if v == 0:
            continue
        if v >= LIMIT or v <= -LIMIT:
            raise OverflowError("entry too large for the compiled kernel")
        rows[r].push_back(entry_t(c, v))

    # sort rows, merge repeated positions, drop zeros
    cdef vector[entry_t] merged
    for r in range(nrows):
        if rows[r].size() == 0:
            continue
        cpp_sort(rows[r].begin(), rows[r].end())
        merged.clear()
        for k in range(rows[r].size()):
            if merged.size() and merged.back().first == rows[r][k].first:
                merged.back().second += rows[r][k].second
                if merged.back().second >= LIMIT or merged.back().second <= -LIMIT:
                    raise OverflowError("entry too large for the compiled kernel")
                if merged.back().second == 0:
                    merged.pop_back()
            else:
                merged.push_back(rows[r][k])
        rows[r].swap(merged)
        for k in range(rows[r].size()):
            c = rows[r][k].first
            cols[c].push_back(r)
            colcount[c] += 1

    # max-heap on negated keys gives (nnz, row) ascending
    cdef priority_queue[key_t] heap
    for r in range(nrows):
        if rows[r].size() > 0:
            heap.push(key_t(-<int>rows[r].size(), -r))

    cdef int npivots = 0
    cdef vector[int] others
    cdef vector[entry_t] prow
    cdef vector[entry_t] out

    while not heap.empty():
        n = -heap.top().first
        pr = -heap.top().second
        heap.pop()
        if not alive[pr] or <int>rows[pr].size() != n:
            continue
        best_c = -1
        best_n = 0
        for k in range(rows[pr].size()):
            v = rows[pr][k].second
            if v == 1 or v == -1:
                c = rows[pr][k].first
                if best_c < 0 or colcount[c] < best_n or (colcount[c] == best_n and c < best_c):
                    best_c = c
                    best_n = colcount[c]
        if best_c < 0:
            continue
        pc = best_c
        npivots += 1
        step += 1

        prow.clear()
        u = 0
        for k in range(rows[pr].size()):
            c = rows[pr][k].first
            colcount[c] -= 1
            if c == pc:
                u = rows[pr][k].second
            else:
                prow.push_back(rows[pr][k])
        rows[pr].clear()
        alive[pr] = 0

        # live rows with a nonzero in the pivot column, each once
        others.clear()
        for k in range(cols[pc].size()):
            r = cols[pc][k]
            if alive[r] and stamp[r] != step and find_value(rows[r], pc) != 0:
                stamp[r] = step
                others.push_back(r)
        cols[pc].clear()
        colcount[pc] = 0

        for k in range(others.size()):
            r = others[k]
            factor = find_value(rows[r], pc) * u
            out.clear()
            i = 0
            j = 0
            while i < rows[r].size() or j < prow.size():
                if j == prow.size() or (i < rows[r].size() and rows[r][i].first < prow[j].first):
                    if rows[r][i].first != pc:
                        out.push_back(rows[r][i])
                    i += 1
                elif i == rows[r].size() or prow[j].first < rows[r][i].first:
                    c = prow[j].first
                    nv = -factor * prow[j].second
                    if nv >= LIMIT or nv <= -LIMIT:
                        raise OverflowError("intermediate entry too large for the compiled kernel")
                    out.push_back(entry_t(c, nv))
                    cols[c].push_back(r)
                    colcount[c] += 1
                    j += 1
                else:
                    c = prow[j].first
                    a = rows[r][i].second
                    nv = a - factor * prow[j].second
                    if nv >= LIMIT or nv <= -LIMIT:
                        raise OverflowError("intermediate entry too large for the compiled kernel")
                    if nv != 0:
                        out.push_back(entry_t(c, nv))
                    else:
                        colcount[c] -= 1
                    i += 1
                    j += 1
            rows[r].swap(out)
            if rows[r].size() > 0:
                heap.push(key_t(-<int>rows[r].size(), -r))
            else:
                alive[r] = 0

    remainder = []
    for r in range(nrows):
        if not alive[r]:
            continue
        for k in range(rows[r].size()):
            remainder.append((r, rows[r][k].first, rows[r][k].second))
    return npivots, remainder
