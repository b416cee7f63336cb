"""Backend selection for the sparse elimination kernel.

The compiled kernel is used when it was built and ``NERVELAB_PURE`` is not
set; otherwise the pure-Python twin runs. The compiled kernel works in int64
and bails out with ``OverflowError`` on large intermediates, in which case the
Python kernel redoes the whole matrix with arbitrary-precision integers.
"""

import os

from . import _pyelim

try:
    from . import _elim as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_COMPILED = _compiled is not None


def default_backend():
    if HAVE_COMPILED and os.environ.get("NERVELAB_PURE") != "1":
        return "compiled"
    return "python"


BACKEND = default_backend()


def unit_eliminate(nrows, ncols, entries, backend=None):
    """Dispatch to a kernel; see ``_pyelim.unit_eliminate`` for semantics."""
    backend = backend or BACKEND
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel is not available")
        entries = list(entries)
        try:
            return _compiled.unit_eliminate(nrows, ncols, entries)
        except OverflowError:
            return _pyelim.unit_eliminate(nrows, ncols, entries)
    if backend == "python":
        return _pyelim.unit_eliminate(nrows, ncols, entries)
    raise ValueError(f"unknown backend {backend!r}")
