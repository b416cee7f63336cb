"""Time the compiled and pure-Python elimination kernels on the same inputs.

Run with ``python3 benchmarks/bench_elimination.py``. Inputs are the boundary
matrices of a Street nerve plus seeded random sparse matrices.
"""

import argparse
import random
import time

from nervelab import cat2
from nervelab.homology import HAVE_COMPILED, SparseIntMatrix, unit_eliminate
from nervelab.nerve import normalized_chains, street_nerve2
from nervelab.theta import node


def nerve_matrices(dmax):
    cx = normalized_chains(street_nerve2(cat2.realize2(node(3, 0, 2)), dmax))
    return [(f"street d_{p}", d) for p, d in enumerate(cx.diffs) if d is not None and d.nnz()]


def random_matrices(seed, sizes):
    rng = random.Random(seed)
    out = []
    for m, n, nnz in sizes:
        entries = {(rng.randrange(m), rng.randrange(n)): rng.choice([-1, 1, 1, 2]) for _ in range(nnz)}
        out.append((f"random {m}x{n}", SparseIntMatrix.from_triples(m, n, [(r, c, v) for (r, c), v in entries.items()])))
    return out


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not HAVE_COMPILED:
        raise SystemExit("compiled kernel not built; run pip install -e . --no-build-isolation")
    cases = nerve_matrices(args.dmax) + random_matrices(
        args.seed, [(500, 500, 2500), (2000, 2000, 8000), (4000, 6000, 20000)])
    print(f"{'matrix':<22}{'shape':>14}{'nnz':>8}{'python s':>11}{'compiled s':>12}{'speedup':>9}")
    for name, M in cases:
        entries = list(M.triples())
        tp, rp = timed(lambda: unit_eliminate(M.nrows, M.ncols, entries, backend="python"), args.repeat)
        tc, rc = timed(lambda: unit_eliminate(M.nrows, M.ncols, entries, backend="compiled"), args.repeat)
        assert rp == rc, f"backends disagree on {name}"
        print(f"{name:<22}{f'{M.nrows}x{M.ncols}':>14}{len(entries):>8}{tp:>11.4f}{tc:>12.4f}{tp / tc:>8.1f}x")


if __name__ == "__main__":
    main()
