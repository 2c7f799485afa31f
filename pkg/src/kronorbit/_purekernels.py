"""Pure-Python elimination kernels.

Fallback used when the compiled extension is unavailable; semantics are
identical to ``_kernels`` (see that module for the contract).  Works for any
modulus that fits in a Python int.
"""


def modp_rref(rows, ncols, p):
    """Reduced row echelon form of an integer matrix mod p, in place.

    ``rows`` is a list of lists of ints (entries need not be reduced mod p
    on input).  Returns ``(rank, pivot_cols)``; on return ``rows`` holds the
    RREF with entries in [0, p).
    """
    nrows = len(rows)
    for r in range(nrows):
        row = rows[r]
        for c in range(ncols):
            row[c] %= p
    rank = 0
    pivot_cols = []
    for col in range(ncols):
        pivot = -1
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            for c in range(col, ncols):
                prow[c] = prow[c] * inv % p
        for r in range(nrows):
            if r == rank:
                continue
            f = rows[r][col]
            if f:
                row = rows[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        pivot_cols.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, pivot_cols
