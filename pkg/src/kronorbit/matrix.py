"""Exact dense matrices over the rationals or a prime field.

Matrices are immutable values: every operation returns a fresh matrix and
nothing mutates shared state, so values can be handed between threads freely.

Elimination strategy (the package hot path):

* prime fields: reduced row echelon form through :mod:`kronorbit.kernels`,
  which picks the compiled kernel when it is built;
* small rational matrices: fraction-free (Bareiss) elimination on a
  denominator-cleared integer matrix, which bounds intermediate swell;
* large rational matrices: row echelon mod one or more ~2**30 primes,
  rational reconstruction of the kernel, then an exact integer verification
  of ``m @ K == 0``.  Because a kernel vector verified over the integers
  bounds the rank from above while the mod-p rank bounds it from below, the
  result is certified exact, never heuristic.  If reconstruction fails the
  code falls back to Bareiss.

Tensor product convention, used by every module downstream: the basis of
X (x) Y is ordered (x_i (x) y_j) with j varying fastest.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fields import QQ, FieldSpec
from . import kernels


class DimensionMismatchError(ValueError):
    pass


def _gen_primes(count, below=(1 << 30) - 1):
    from .fields import _is_prime

    primes = []
    candidate = below
    while len(primes) < count:
        if _is_prime(candidate):
            primes.append(candidate)
        candidate -= 2
    return primes


_RECON_PRIMES = _gen_primes(12)

# Bareiss is used when min(r,c)**2 * max(r,c) stays below this; beyond it the
# certified multimodular path wins on structured matrices.
_BAREISS_COST_LIMIT = 4_000_000


class Matrix:
    """Immutable dense matrix with exact entries over one FieldSpec."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field, rows, _copy=True, ncols=None):
        self.field = field
        self.nrows = len(rows)
        if rows:
            self.ncols = len(rows[0])
        else:
            self.ncols = 0 if ncols is None else ncols
        if _copy:
            self._rows = [list(r) for r in rows]
        else:
            self._rows = rows
        for r in self._rows:
            if len(r) != self.ncols:
                raise DimensionMismatchError("ragged rows")

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, [[field.from_int(x) if isinstance(x, int) else x for x in row] for row in rows], _copy=False)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)], _copy=False, ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = o
        return cls(field, rows, _copy=False)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row_list(self):
        return [list(r) for r in self._rows]

    def column(self, j):
        return [r[j] for r in self._rows]

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self):
        z = self.field.zero()
        return all(x == z for r in self._rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, tuple(tuple(r) for r in self._rows)))

    def __repr__(self):
        return "Matrix(%s, %dx%d)" % (self.field.format_spec(), self.nrows, self.ncols)

    # -- arithmetic -------------------------------------------------------------

    def _check_same_field(self, other):
        if self.field != other.field:
            raise DimensionMismatchError("matrices over different fields")

    def __add__(self, other):
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError("shape mismatch in add")
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)],
            _copy=False,
        )

    def __sub__(self, other):
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError("shape mismatch in sub")
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)],
            _copy=False,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self._rows], _copy=False)

    def scale(self, scalar):
        mul = self.field.mul
        return Matrix(self.field, [[mul(scalar, a) for a in r] for r in self._rows], _copy=False)

    def __matmul__(self, other):
        self._check_same_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError("shape mismatch in matmul")
        f = self.field
        if self.nrows == 0 or self.ncols == 0 or other.ncols == 0:
            return Matrix.zeros(f, self.nrows, other.ncols)
        z = f.zero()
        bt = list(zip(*other._rows))
        out = []
        for ra in self._rows:
            row = []
            for cb in bt:
                acc = z
                for a, b in zip(ra, cb):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(f, out, _copy=False)

    def transpose(self):
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, self.ncols, self.nrows)
        return Matrix(self.field, [list(c) for c in zip(*self._rows)], _copy=False)

    def hstack(self, other):
        self._check_same_field(other)
        if self.nrows != other.nrows:
            raise DimensionMismatchError("hstack row mismatch")
        return Matrix(
            self.field,
            [ra + rb for ra, rb in zip(self._rows, other._rows)],
            _copy=False,
            ncols=self.ncols + other.ncols,
        )

    def vstack(self, other):
        self._check_same_field(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError("vstack col mismatch")
        return Matrix(self.field, self._rows + other._rows, ncols=self.ncols)

    def submatrix(self, row_idx, col_idx):
        col_idx = list(col_idx)
        return Matrix(
            self.field,
            [[self._rows[i][j] for j in col_idx] for i in row_idx],
            _copy=False,
            ncols=len(col_idx),
        )


def direct_sum(a, b):
    a._check_same_field(b)
    f = a.field
    out = Matrix.zeros(f, a.nrows + b.nrows, a.ncols + b.ncols)
    rows = out._rows
    for i in range(a.nrows):
        rows[i][: a.ncols] = a._rows[i]
    for i in range(b.nrows):
        rows[a.nrows + i][a.ncols :] = b._rows[i]
    return out


def tensor(a, b):
    """Kronecker product; basis of X (x) Y ordered (x_i (x) y_j), j fastest.

    With that ordering tensor(a, b) acting on column vectors agrees with
    a (x) b acting on the tensor basis.
    """
    a._check_same_field(b)
    f = a.field
    mul = f.mul
    out = Matrix.zeros(f, a.nrows * b.nrows, a.ncols * b.ncols)
    rows = out._rows
    for i in range(a.nrows):
        for k in range(b.nrows):
            target = rows[i * b.nrows + k]
            arow = a._rows[i]
            brow = b._rows[k]
            for j in range(a.ncols):
                aij = arow[j]
                if aij:
                    base = j * b.ncols
                    for l in range(b.ncols):
                        if brow[l]:
                            target[base + l] = mul(aij, brow[l])
    return out


# -- elimination ----------------------------------------------------------------


def _int_rows(m):
    """Denominator-cleared integer rows of a rational matrix (row scaling
    keeps rank and right kernel)."""
    out = []
    for row in m._rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def _bareiss_rref(rows, ncols):
    """Fraction-free fully reduced echelon form of integer rows, in place.

    Returns (rank, pivot_cols).  All divisions are exact; entries stay
    minors of the input, which bounds growth.
    """
    nrows = len(rows)
    rank = 0
    pivots = []
    prev = 1
    for col in range(ncols):
        pivot = -1
        for r in range(rank, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(nrows):
            if r == rank:
                continue
            f = rows[r][col]
            row = rows[r]
            prow = rows[rank]
            if f:
                for c in range(ncols):
                    row[c] = (row[c] * p - f * prow[c]) // prev
            else:
                for c in range(ncols):
                    row[c] = (row[c] * p) // prev
        pivots.append(col)
        rank += 1
        prev = p
        if rank == nrows:
            break
    return rank, pivots


def _kernel_from_rref(rows, ncols, rank, pivots, to_scalar, zero=0, one=1):
    """Kernel basis columns from a fully reduced echelon form.

    ``to_scalar(x, pivot_value)`` maps a stored entry and its pivot to the
    field value of -entry/pivot.  Free coordinates are set to one.
    """
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fcol in free_cols:
        vec = [zero] * ncols
        vec[fcol] = one
        for i, pcol in enumerate(pivots):
            vec[pcol] = to_scalar(rows[i][fcol], rows[i][pcol])
        basis.append(vec)
    return free_cols, basis


def _rational_reconstruct(u, m):
    """Lift u mod m to a fraction a/b with |a|, |b| <= sqrt(m/2), or None."""
    u %= m
    if u == 0:
        return Fraction(0)
    bound = math.isqrt(m // 2)
    a0, a1 = m, u
    b0, b1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if b1 == 0 or abs(b1) > bound:
        return None
    if b1 < 0:
        a1, b1 = -a1, -b1
    if math.gcd(a1, b1) != 1:
        return None
    return Fraction(a1, b1)


def _qq_kernel_bareiss(int_rows, ncols):
    work = [list(r) for r in int_rows]
    rank, pivots = _bareiss_rref(work, ncols)
    free_cols, basis = _kernel_from_rref(
        work, ncols, rank, pivots, lambda x, piv: Fraction(-x, piv),
        zero=Fraction(0), one=Fraction(1),
    )
    return rank, free_cols, basis


def _qq_kernel_multimodular(int_rows, ncols):
    """Certified kernel of an integer matrix via mod-p lifting.

    Returns (rank, free_cols, basis) or None if no prime/CRT combination
    reconstructs a verifiable kernel (caller then falls back to Bareiss).
    """
    attempts = []  # (pivots tuple) -> list of (p, rref rows)
    best = None
    for p in _RECON_PRIMES:
        work = [[x % p for x in row] for row in int_rows]
        rank, pivots = kernels.modp_rref(work, ncols, p)
        key = (rank, tuple(pivots))
        attempts.append((key, p, work))
        if best is None or key[0] > best[0]:
            best = key
        # try reconstruction using all primes seen so far that agree with the
        # best (largest-rank) echelon pattern
        group = [(p2, w2) for (k2, p2, w2) in attempts if k2 == best]
        rank, pivots = best
        modulus = 1
        for p2, _ in group:
            modulus *= p2
        if len(group) == 1:
            combined = group[0][1]
        else:
            combined = []
            for ri in range(len(int_rows)):
                row = []
                for ci in range(ncols):
                    residue, mod = 0, 1
                    for p2, w2 in group:
                        inv = pow(mod % p2, p2 - 2, p2)
                        t = ((w2[ri][ci] - residue) * inv) % p2
                        residue += mod * t
                        mod *= p2
                    row.append(residue)
                combined.append(row)
        lifted = _try_lift_kernel(combined, ncols, rank, pivots, modulus)
        if lifted is None:
            continue
        free_cols, basis = lifted
        if _verify_integer_kernel(int_rows, basis):
            return rank, free_cols, basis
    return None


def _try_lift_kernel(rref_rows, ncols, rank, pivots, modulus):
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fcol in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fcol] = Fraction(1)
        for i, pcol in enumerate(pivots):
            x = rref_rows[i][fcol] % modulus
            lift = _rational_reconstruct((-x) % modulus, modulus)
            if lift is None:
                return None
            vec[pcol] = lift
        basis.append(vec)
    return free_cols, basis


def _verify_integer_kernel(int_rows, basis):
    """Exact check that every basis vector is killed by the integer matrix."""
    for vec in basis:
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        ivec = [int(x * lcm) for x in vec]
        support = [j for j, x in enumerate(ivec) if x]
        for row in int_rows:
            acc = 0
            for j in support:
                acc += row[j] * ivec[j]
            if acc:
                return False
    return True


def _qq_rank_kernel(m, need_basis):
    int_rows = _int_rows(m)
    ncols = m.ncols
    if ncols == 0 or m.nrows == 0:
        rank = 0
        free_cols = list(range(ncols))
        basis = []
        for f in free_cols:
            vec = [Fraction(0)] * ncols
            vec[f] = Fraction(1)
            basis.append(vec)
        return rank, basis
    cost = min(m.nrows, ncols) ** 2 * max(m.nrows, ncols)
    if cost > _BAREISS_COST_LIMIT:
        lifted = _qq_kernel_multimodular(int_rows, ncols)
        if lifted is not None:
            rank, _, basis = lifted
            return rank, basis
    rank, _, basis = _qq_kernel_bareiss(int_rows, ncols)
    return rank, basis


def _fp_rank_kernel(m, need_basis):
    p = m.field.p
    work = [list(r) for r in m._rows]
    rank, pivots = kernels.modp_rref(work, m.ncols, p)
    _, basis = _kernel_from_rref(work, m.ncols, rank, pivots, lambda x, piv: (-x) % p)
    return rank, basis


def rank(m):
    """Exact rank of ``m`` over its field."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.field.is_rational:
        r, _ = _qq_rank_kernel(m, need_basis=False)
    else:
        r, _ = _fp_rank_kernel(m, need_basis=False)
    return r


def kernel_basis(m):
    """Basis of the right kernel of ``m``, returned as matrix columns.

    Always satisfies ``m @ kernel_basis(m) == 0`` exactly and
    ``rank(m) + ncols(kernel) == ncols(m)``.
    """
    if m.ncols == 0:
        return Matrix.zeros(m.field, 0, 0)
    if m.nrows == 0:
        return Matrix.identity(m.field, m.ncols)
    if m.field.is_rational:
        _, basis = _qq_rank_kernel(m, need_basis=True)
    else:
        _, basis = _fp_rank_kernel(m, need_basis=True)
    if not basis:
        return Matrix.zeros(m.field, m.ncols, 0)
    return Matrix(m.field, [list(col) for col in zip(*basis)], _copy=False)


def cokernel_with_section(m):
    """Projection onto a complement of the column space, plus a section.

    Returns ``(projection, section)`` with ``projection @ m == 0``,
    ``projection`` of full row rank ``nrows(m) - rank(m)``, and
    ``projection @ section`` the identity on the complement.
    """
    proj = kernel_basis(m.transpose()).transpose()
    if proj.nrows == 0:
        return proj, Matrix.zeros(m.field, m.nrows, 0)
    section = solve_right(proj, Matrix.identity(m.field, proj.nrows))
    return proj, section


def solve_right(a, b):
    """One exact solution X of A @ X = B; raises if the system is unsolvable."""
    a._check_same_field(b)
    if a.nrows != b.nrows:
        raise DimensionMismatchError("solve_right shape mismatch")
    f = a.field
    aug = a.hstack(b)
    rows = aug.row_list()
    rank_a, pivots = _field_rref(rows, aug.ncols, f)
    for pcol in pivots:
        if pcol >= a.ncols:
            raise ValueError("inconsistent linear system")
    x = Matrix.zeros(f, a.ncols, b.ncols)
    xr = x._rows
    for i, pcol in enumerate(pivots):
        for j in range(b.ncols):
            xr[pcol][j] = rows[i][a.ncols + j]
    return x


def _field_rref(rows, ncols, f):
    """Plain RREF with field arithmetic, in place; returns (rank, pivots)."""
    nrows = len(rows)
    rank_count = 0
    pivots = []
    for col in range(ncols):
        pivot = -1
        for r in range(rank_count, nrows):
            if rows[r][col]:
                pivot = r
                break
        if pivot < 0:
            continue
        rows[rank_count], rows[pivot] = rows[pivot], rows[rank_count]
        prow = rows[rank_count]
        inv = f.inv(prow[col])
        if inv != f.one():
            for c in range(col, ncols):
                prow[c] = f.mul(prow[c], inv)
        for r in range(nrows):
            if r == rank_count:
                continue
            coef = rows[r][col]
            if coef:
                row = rows[r]
                for c in range(col, ncols):
                    row[c] = f.sub(row[c], f.mul(coef, prow[c]))
        pivots.append(col)
        rank_count += 1
        if rank_count == nrows:
            break
    return rank_count, pivots


def column_space_basis(m):
    """Columns of ``m`` indexed by the RREF pivots: a column-space basis."""
    work = m.row_list()
    _, col_pivots = _field_rref(work, m.ncols, m.field)
    return m.submatrix(range(m.nrows), col_pivots)


def is_invertible(m):
    return m.nrows == m.ncols and rank(m) == m.nrows


def inverse(m):
    if m.nrows != m.ncols:
        raise DimensionMismatchError("inverse of non-square matrix")
    return solve_right(m, Matrix.identity(m.field, m.nrows))
