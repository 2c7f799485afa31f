"""Backend selection for the elimination hot loop.

The compiled Cython kernel is picked at import time when present; otherwise
the pure-Python twin is used.  ``BACKEND`` records the choice so reports and
benchmarks can name it.
"""

from . import _purekernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

# The compiled kernel is limited to p < 2**30 (64-bit products).
_COMPILED_MAX_P = 1 << 30


def modp_rref(rows, ncols, p):
    if _compiled is not None and p < _COMPILED_MAX_P:
        return _compiled.modp_rref(rows, ncols, p)
    return _purekernels.modp_rref(rows, ncols, p)


def modp_rref_pure(rows, ncols, p):
    return _purekernels.modp_rref(rows, ncols, p)


def modp_rref_compiled(rows, ncols, p):
    if _compiled is None:
        raise RuntimeError("compiled kernel not available")
    return _compiled.modp_rref(rows, ncols, p)
