"""Sparse matrices over the Laurent ring and exact rational elimination.

Matrices are stored column-major: ``cols[c][r]`` is the (r, c) entry, with no
zeros retained.  Operator equality throughout the package is equality of
these matrices.  The module also hosts the incremental rational row-reduction
used for span-dimension and rank computations at specialized q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .qscalar import QLaurent

__all__ = ["SparseMatrix", "RationalEchelon", "primitive_int_vector"]


class SparseMatrix:
    """A dim x dim sparse matrix with QLaurent entries."""

    __slots__ = ("dim", "cols", "_diag")

    def __init__(self, dim, cols=None):
        self.dim = dim
        self.cols = {}
        self._diag = None
        if cols:
            for c, col in cols.items():
                clean = {r: v for r, v in col.items() if v}
                if clean:
                    self.cols[c] = clean

    @classmethod
    def _raw(cls, dim, cols):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.cols = cols
        obj._diag = None
        return obj

    @classmethod
    def identity(cls, dim):
        one = QLaurent.one()
        return cls._raw(dim, {c: {c: one} for c in range(dim)})

    @classmethod
    def diagonal(cls, entries):
        """Diagonal matrix from a list of QLaurent entries."""
        cols = {}
        for c, v in enumerate(entries):
            if v:
                cols[c] = {c: v}
        return cls._raw(len(entries), cols)

    def entry(self, r, c):
        return self.cols.get(c, {}).get(r, QLaurent.zero())

    def nnz(self):
        return sum(len(col) for col in self.cols.values())

    def is_zero(self):
        return not self.cols

    def is_diagonal(self):
        if self._diag is None:
            self._diag = all(set(col) == {c} for c, col in self.cols.items())
        return self._diag

    def diagonal_entries(self):
        """All dim diagonal entries (zeros included); errors if off-diagonal."""
        if not self.is_diagonal():
            raise ValueError("matrix is not diagonal")
        zero = QLaurent.zero()
        return [self.cols.get(c, {}).get(c, zero) for c in range(self.dim)]

    def monomial_diag_exponents(self):
        """Exponents e_c when the matrix is diag(q^(e_c)) with no zero entry,
        else None.  Lets torus conjugations reduce to integer arithmetic."""
        if len(self.cols) != self.dim:
            return None
        exps = [0] * self.dim
        for c, col in self.cols.items():
            if len(col) != 1:
                return None
            v = col.get(c)
            if v is None:
                return None
            st = v.single_term()
            if st is None or st[1] != 1:
                return None
            exps[c] = st[0]
        return exps

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def __add__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            dst = cols.setdefault(c, {})
            for r, v in col.items():
                s = dst.get(r)
                s = v if s is None else s + v
                if s:
                    dst[r] = s
                else:
                    dst.pop(r, None)
            if not dst:
                del cols[c]
        return SparseMatrix._raw(self.dim, cols)

    def __neg__(self):
        return SparseMatrix._raw(
            self.dim, {c: {r: -v for r, v in col.items()} for c, col in self.cols.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, coeff):
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.from_rational(coeff)
        if not coeff:
            return SparseMatrix._raw(self.dim, {})
        return SparseMatrix._raw(
            self.dim,
            {c: {r: v * coeff for r, v in col.items()} for c, col in self.cols.items()},
        )

    def __mul__(self, other):
        """Matrix product self @ other (columns of the product via other's)."""
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        acols = self.cols
        cols = {}
        if other.is_diagonal():
            for c, bcol in other.cols.items():
                acol = acols.get(c)
                if not acol:
                    continue
                bv = bcol[c]
                cols[c] = {r: av * bv for r, av in acol.items()}
            return SparseMatrix._raw(self.dim, cols)
        if self.is_diagonal():
            for c, bcol in other.cols.items():
                out = {}
                for r, bv in bcol.items():
                    acol = acols.get(r)
                    if acol:
                        out[r] = acol[r] * bv
                if out:
                    cols[c] = out
            return SparseMatrix._raw(self.dim, cols)
        # general case: accumulate raw term dicts to avoid scalar churn
        for c, bcol in other.cols.items():
            out = {}
            for k, bv in bcol.items():
                acol = acols.get(k)
                if not acol:
                    continue
                bterms = bv.terms
                if len(bterms) == 1:
                    (eb, cb), = bterms.items()
                    for r, av in acol.items():
                        dst = out.get(r)
                        if dst is None:
                            dst = out[r] = {}
                        for ea, ca in av.terms.items():
                            e = ea + eb
                            s = dst.get(e, 0) + ca * cb
                            if s:
                                dst[e] = s
                            else:
                                del dst[e]
                else:
                    for r, av in acol.items():
                        dst = out.get(r)
                        if dst is None:
                            dst = out[r] = {}
                        for ea, ca in av.terms.items():
                            for eb, cb in bterms.items():
                                e = ea + eb
                                s = dst.get(e, 0) + ca * cb
                                if s:
                                    dst[e] = s
                                else:
                                    del dst[e]
            col = {r: QLaurent._raw(t) for r, t in out.items() if t}
            if col:
                cols[c] = col
        return SparseMatrix._raw(self.dim, cols)

    def commutator(self, other):
        return self * other - other * self

    def kron(self, other):
        """Kronecker product; index (r1, r2) -> r1 * other.dim + r2."""
        d2 = other.dim
        cols = {}
        for c1, col1 in self.cols.items():
            for c2, col2 in other.cols.items():
                out = {}
                for r1, v1 in col1.items():
                    base = r1 * d2
                    for r2, v2 in col2.items():
                        out[base + r2] = v1 * v2
                cols[c1 * d2 + c2] = out
        return SparseMatrix._raw(self.dim * d2, cols)

    def specialize(self, value):
        """Entrywise evaluation at q = value; returns {col: {row: Fraction}}."""
        value = Fraction(value)
        cols = {}
        for c, col in self.cols.items():
            out = {}
            for r, v in col.items():
                x = v.specialize(value)
                if x:
                    out[r] = x
            if out:
                cols[c] = out
        return cols

    def apply_terms(self, entries):
        """Apply to a sparse vector {state: QLaurent}; returns the same shape."""
        out = {}
        for c, coeff in entries.items():
            col = self.cols.get(c)
            if not col:
                continue
            for r, v in col.items():
                s = out.get(r)
                p = v * coeff
                s = p if s is None else s + p
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out

    def first_difference(self, other):
        """Column index of the first differing column, or None if equal."""
        for c in sorted(set(self.cols) | set(other.cols)):
            if self.cols.get(c, {}) != other.cols.get(c, {}):
                return c
        return None


def primitive_int_vector(vec):
    """Rescale a sparse rational vector to a primitive integer vector.

    Scaling does not change the span; primitive entries keep elimination in
    fast native-int arithmetic.
    """
    if not vec:
        return {}
    denom = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            denom = lcm(denom, v.denominator)
    ints = {}
    g = 0
    for k, v in vec.items():
        n = int(v * denom) if isinstance(v, Fraction) else v * denom
        ints[k] = n
        g = gcd(g, n)
    if g > 1:
        ints = {k: n // g for k, n in ints.items()}
    return ints


class RationalEchelon:
    """Incremental echelon basis for sparse vectors with exact entries.

    Keys must be totally ordered (ints or tuples).  Each inserted vector is
    reduced against current pivots; a nonzero remainder becomes a new pivot.
    """

    __slots__ = ("pivots",)

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Fully reduce a vector; returns a primitive integer remainder."""
        vec = primitive_int_vector(vec)
        while vec:
            lead = max(vec)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return vec
            a = pivot[lead]
            b = vec[lead]
            out = {}
            for k, v in vec.items():
                out[k] = v * a
            for k, v in pivot.items():
                s = out.get(k, 0) - v * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
            vec = out
        return {}

    def insert(self, vec):
        """Reduce and insert; returns the new pivot vector or None."""
        rem = self.reduce(vec)
        if not rem:
            return None
        g = 0
        for v in rem.values():
            g = gcd(g, v)
        if g > 1:
            rem = {k: v // g for k, v in rem.items()}
        self.pivots[max(rem)] = rem
        return rem
