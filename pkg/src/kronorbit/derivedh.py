"""Bounded derived category of Kronecker representations, in normal form.

Over a hereditary category every bounded complex splits as a sum of shifted
modules, so an object here is a finite multiset of (representation, shift)
pairs.  That normal form makes the autoequivalence F = a[-1] and its inverse
finite, summand-wise computations.

The key shift bookkeeping, used downstream to certify orbit Hom windows:
applying F strictly lowers every summand shift by at least one (the
reflection contributes shifts in {0, -1}), and F^{-1} strictly raises them.
"""

from __future__ import annotations

from .fields import QQ
from .matrix import DimensionMismatchError, Matrix, kernel_basis, solve_right, rank, cokernel_with_section
from . import kronecker
from .kronecker import (
    BilinearForm,
    KroneckerRep,
    apply_a_parts,
    apply_a_inverse_parts,
    hom_ext,
    iso_check,
)


class UnsupportedMorphismError(ValueError):
    pass


class ShiftedRep:
    """A representation placed in a single cohomological degree."""

    __slots__ = ("rep", "shift")

    def __init__(self, rep, shift):
        self.rep = rep
        self.shift = shift

    def __repr__(self):
        return "ShiftedRep(dim=(%d,%d), shift=%d)" % (self.rep.d1, self.rep.d2, self.shift)


class FormalObject:
    """Finite sum of shifted representations; zero summands are dropped.

    Equality of the underlying data is order-insensitive only up to the
    checks done by iso testing; the stored order is the construction order.
    """

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = tuple(s for s in summands if not s.rep.is_zero())

    @classmethod
    def from_parts(cls, parts):
        return cls([ShiftedRep(rep, shift) for rep, shift in parts])

    @classmethod
    def of_rep(cls, rep, shift=0):
        return cls([ShiftedRep(rep, shift)])

    def is_zero(self):
        return not self.summands

    def parts(self):
        return [(s.rep, s.shift) for s in self.summands]

    def shifted(self, k):
        return FormalObject([ShiftedRep(s.rep, s.shift + k) for s in self.summands])

    def shifts(self):
        return sorted({s.shift for s in self.summands})

    def max_shift(self):
        return max(s.shift for s in self.summands) if self.summands else None

    def min_shift(self):
        return min(s.shift for s in self.summands) if self.summands else None

    def direct_sum(self, other):
        return FormalObject(self.summands + other.summands)

    def at_shift(self, k):
        """Direct sum of all summands sitting in degree k, as one rep."""
        reps = [s.rep for s in self.summands if s.shift == k]
        if not reps:
            return None
        return kronecker.direct_sum(*reps)

    def quiver_data(self):
        for s in self.summands:
            return s.rep.n, s.rep.field
        return None

    def total_dim(self):
        return sum(s.rep.d1 + s.rep.d2 for s in self.summands)

    def dim_at(self, k):
        d1 = sum(s.rep.d1 for s in self.summands if s.shift == k)
        d2 = sum(s.rep.d2 for s in self.summands if s.shift == k)
        return (d1, d2)

    def __repr__(self):
        if not self.summands:
            return "FormalObject(0)"
        bits = ", ".join("(%d,%d)[%d]" % (s.rep.d1, s.rep.d2, s.shift) for s in self.summands)
        return "FormalObject(%s)" % bits


class FormalMorphism:
    """A degree-zero morphism between single-shift formal objects.

    Stored as one representation morphism (f1, f2) between the direct sums;
    blocks between summands of unequal shift are not representable here.
    """

    def __init__(self, source, target, f1, f2):
        if len(source.shifts()) > 1 or len(target.shifts()) > 1:
            raise UnsupportedMorphismError("morphisms only between single-shift objects")
        if source.shifts() != target.shifts():
            raise UnsupportedMorphismError("degree-0 morphisms need equal shifts")
        self.source = source
        self.target = target
        self.f1 = f1
        self.f2 = f2
        srep = source.at_shift(source.shifts()[0])
        trep = target.at_shift(target.shifts()[0])
        if not kronecker.is_morphism(srep, trep, f1, f2):
            raise UnsupportedMorphismError("matrices do not define a morphism")


def _hom_space_dim(x, y, offset):
    """dim Hom(x, y[offset]) between plain representations in the derived
    category: Hom for offset 0, Ext^1 for offset 1, zero otherwise."""
    if offset == 0:
        return hom_ext(x, y).hom_dim
    if offset == 1:
        return hom_ext(x, y).ext_dim
    return 0


def shifted_hom(x, y, j):
    """dim Hom(x, y[j]) for formal objects, summand pair by summand pair."""
    total = 0
    for sx in x.summands:
        for sy in y.summands:
            offset = sy.shift + j - sx.shift
            if offset in (0, 1):
                total += _hom_space_dim(sx.rep, sy.rep, offset)
    return total


def cone(f):
    """Mapping cone of a degree-zero morphism: ker(f)[1] (+) coker(f).

    Signed dimensions satisfy dim cone = dim target - dim source in the
    Grothendieck group.
    """
    base_shift = f.source.shifts()[0]
    srep = f.source.at_shift(base_shift)
    trep = f.target.at_shift(base_shift)
    fld = srep.field
    k1 = kernel_basis(f.f1)
    k2 = kernel_basis(f.f2)
    ker_maps = []
    for j in range(srep.n):
        rhs = srep.maps[j] @ k2
        ker_maps.append(solve_right(k1, rhs) if k1.ncols else Matrix.zeros(fld, 0, k2.ncols))
    ker_rep = KroneckerRep(srep.n, fld, k1.ncols, k2.ncols, ker_maps)
    p1, _ = cokernel_with_section(f.f1)
    p2, _ = cokernel_with_section(f.f2)
    cok_maps = []
    for j in range(srep.n):
        # induced map on cokernels: solve p1 c = m p2 for m columnwise
        m = solve_right(p2.transpose(), (p1 @ trep.maps[j]).transpose()).transpose()
        cok_maps.append(m)
    cok_rep = KroneckerRep(srep.n, fld, p1.nrows, p2.nrows, cok_maps)
    parts = []
    if not ker_rep.is_zero():
        parts.append((ker_rep, base_shift + 1))
    if not cok_rep.is_zero():
        parts.append((cok_rep, base_shift))
    return FormalObject.from_parts(parts)


def apply_F(x, pi=None):
    """The orbit functor a[-1] on formal objects, summand-wise."""
    out = []
    for rep, shift in x.parts():
        for rep2, shift2 in apply_a_parts(rep, pi):
            out.append((rep2, shift + shift2 - 1))
    return FormalObject.from_parts(out)


def apply_F_inverse(x, pi=None):
    out = []
    for rep, shift in x.parts():
        for rep2, shift2 in apply_a_inverse_parts(rep, pi):
            out.append((rep2, shift + shift2 + 1))
    return FormalObject.from_parts(out)


def apply_a_formal(x, pi=None):
    out = []
    for rep, shift in x.parts():
        for rep2, shift2 in apply_a_parts(rep, pi):
            out.append((rep2, shift + shift2))
    return FormalObject.from_parts(out)


def apply_a_inverse_formal(x, pi=None):
    out = []
    for rep, shift in x.parts():
        for rep2, shift2 in apply_a_inverse_parts(rep, pi):
            out.append((rep2, shift + shift2))
    return FormalObject.from_parts(out)


def tau_formal(x):
    out = []
    for rep, shift in x.parts():
        for rep2, shift2 in kronecker.tau_parts(rep):
            out.append((rep2, shift + shift2))
    return FormalObject.from_parts(out)


def formal_iso_check(x, y, seed=0, trials=20):
    """Shift-by-shift isomorphism test of formal objects.

    Returns True / False / None like the representation-level test.
    """
    shifts = sorted(set(x.shifts()) | set(y.shifts()))
    verdict = True
    for k in shifts:
        rx = x.at_shift(k)
        ry = y.at_shift(k)
        if rx is None and ry is None:
            continue
        if rx is None or ry is None:
            return False
        sub = iso_check(rx, ry, seed=seed, trials=trials)
        if sub is False:
            return False
        if sub is None:
            verdict = None
    return verdict
