# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel for prime fields.

Hot loop of the package: dense reduced row echelon form mod p with machine
integers.  Requires p < 2**30 so that products fit comfortably in 64 bits;
callers with larger moduli use the pure-Python fallback.
"""

from libc.stdlib cimport malloc, free


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p
    cdef long long old_r = a, r = p
    cdef long long old_s = 1, s = 0
    cdef long long q, t
    while r != 0:
        q = old_r / r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    old_s %= p
    if old_s < 0:
        old_s += p
    return old_s


def modp_rref(list rows, long ncols, long long p):
    """In-place RREF of ``rows`` (list of list of int) mod p.

    Returns (rank, pivot_cols).  Same contract as the pure fallback.
    """
    cdef long nrows = len(rows)
    cdef long r, c, col, rank, pivot
    cdef long long f, inv, v
    cdef long long *a
    if p <= 1 or p >= (1 << 30):
        raise ValueError("compiled kernel requires 1 < p < 2**30")
    if nrows == 0 or ncols == 0:
        return 0, []
    a = <long long *> malloc(nrows * ncols * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                v = row[c]
                v %= p
                if v < 0:
                    v += p
                a[r * ncols + c] = v
        rank = 0
        pivot_cols = []
        for col in range(ncols):
            pivot = -1
            for r in range(rank, nrows):
                if a[r * ncols + col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rank:
                for c in range(col, ncols):
                    v = a[rank * ncols + c]
                    a[rank * ncols + c] = a[pivot * ncols + c]
                    a[pivot * ncols + c] = v
            inv = _inv_mod(a[rank * ncols + col], p)
            if inv != 1:
                for c in range(col, ncols):
                    a[rank * ncols + c] = (a[rank * ncols + c] * inv) % p
            for r in range(nrows):
                if r == rank:
                    continue
                f = a[r * ncols + col]
                if f != 0:
                    for c in range(col, ncols):
                        v = a[r * ncols + c] - (f * a[rank * ncols + c]) % p
                        if v < 0:
                            v += p
                        a[r * ncols + c] = v
            pivot_cols.append(col)
            rank += 1
            if rank == nrows:
                break
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                row[c] = a[r * ncols + c]
        return rank, pivot_cols
    finally:
        free(a)
