"""Pure-Python sparse unit-pivot elimination.

This is the reference twin of the compiled ``nervelab.homology._elim``
kernel. Both implement the same deterministic pivot rule, so they return the
same remainder on the same input.
"""

import heapq


def unit_eliminate(nrows, ncols, entries):
    """Eliminate unit pivots from a sparse integer matrix.

    ``entries`` is an iterable of ``(row, col, value)`` triples. Repeated
    positions are summed.

    Every step picks, among rows with the fewest nonzeros, a row holding a
    ``+1``/``-1`` entry, takes the unit entry of that row whose column is
    sparsest (ties to the lowest column index), and replaces the matrix by
    the Schur complement at that pivot. Unit pivots keep everything integral
    and each one is an elementary unimodular step, so the result has the
    same Smith normal form up to the removed invariant factors equal to 1.

    Returns ``(npivots, remainder)`` where ``remainder`` is a sorted list of
    ``(row, col, value)`` triples of what is left (no unit entries remain).
    """
    rows = {}
    cols = {}
    for r, c, v in entries:
        if not v:
            continue
        row = rows.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
            cols.setdefault(c, set()).add(r)
        else:
            del row[c]
            cols[c].discard(r)
    heap = [(len(row), r) for r, row in rows.items() if row]
    heapq.heapify(heap)
    npivots = 0

    while heap:
        nnz, pr = heapq.heappop(heap)
        prow = rows.get(pr)
        if prow is None or len(prow) != nnz:
            continue
        best = None
        for c, v in prow.items():
            if v == 1 or v == -1:
                key = (len(cols[c]), c)
                if best is None or key < best:
                    best = key
        if best is None:
            # parked; re-queued only if a later update touches this row
            continue
        pc = best[1]
        u = prow[pc]
        npivots += 1
        del rows[pr]
        for c in prow:
            cols[c].discard(pr)
        others = cols.pop(pc)
        for r in others:
            row = rows[r]
            factor = row.pop(pc) * u
            for c, v in prow.items():
                if c == pc:
                    continue
                nv = row.get(c, 0) - factor * v
                if nv:
                    if c not in row:
                        cols[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if row:
                heapq.heappush(heap, (len(row), r))
            else:
                del rows[r]

    remainder = sorted(
        (r, c, v) for r, row in rows.items() for c, v in row.items()
    )
    return npivots, remainder
