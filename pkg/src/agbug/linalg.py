"""Exact linear algebra over a :class:`~agbug.field.Field`.

Dense matrices are plain lists of row lists.  Conventions are fixed so that
results are reproducible across runs:

* pivots: leftmost nonzero column, and within it the first nonzero row;
* kernel basis: one vector per free column, in column order, with that free
  variable set to 1 and the other free variables set to 0;
* particular solutions: free variables set to 0.

Rank over the rationals uses fraction-free Bareiss elimination on an
integer copy of the matrix.  Everything else runs Gauss-Jordan directly on
field elements.

:class:`Echelon` is the sparse workhorse behind graded ideals: a reduced row
echelon form over arbitrary hashable column labels, grown one vector at a
time.
"""
from __future__ import annotations

from math import lcm
from typing import Callable, Hashable, Sequence

from .errors import NotSquare, ShapeMismatch
from .field import Field

Matrix = list  # list of row lists


def _shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for r in M:
        if len(r) != cols:
            raise ShapeMismatch("ragged matrix")
    return rows, cols


def _coerce(M, field: Field) -> list[list]:
    return [[field(x) for x in row] for row in M]


def rref(M: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    _shape(M)
    A = _coerce(M, field)
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = field.one / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def _integer_rows(M, field: Field) -> list[list[int]]:
    out = []
    for row in M:
        row = [field(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def bareiss_rank(M: Sequence[Sequence], field: Field) -> int:
    """Rank of a rational matrix by fraction-free elimination."""
    A = _integer_rows(M, field)
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        piv = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            A[i] = [(piv * x - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = piv
        r += 1
    return r


def rank(M: Sequence[Sequence], field: Field) -> int:
    _shape(M)
    if not M or not M[0]:
        return 0
    if field.p == 0:
        return bareiss_rank(M, field)
    return len(rref(M, field)[1])


def kernel(M: Sequence[Sequence], field: Field, ncols: int | None = None) -> list[list]:
    """Basis of the right null space ``{v : M v = 0}``."""
    rows, cols = _shape(M)
    if rows == 0:
        cols = ncols if ncols is not None else cols
        return [[field.one if j == i else field.zero for j in range(cols)] for i in range(cols)]
    R, pivots = rref(M, field)
    pivset = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivset:
            continue
        v = [field.zero] * cols
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -R[r][free]
        basis.append(v)
    return basis


def solve(M: Sequence[Sequence], b: Sequence, field: Field, ncols: int | None = None):
    """One solution of ``M x = b`` or ``None`` when the system is inconsistent."""
    rows, cols = _shape(M)
    if len(b) != rows:
        raise ShapeMismatch("right-hand side length differs from row count")
    if rows == 0:
        return [field.zero] * (ncols or 0)
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug, field)
    if pivots and pivots[-1] == cols:
        return None
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = R[r][cols]
    return x


def det(M: Sequence[Sequence], field: Field):
    rows, cols = _shape(M)
    if rows != cols:
        raise NotSquare(f"{rows}x{cols} matrix has no determinant")
    A = _coerce(M, field)
    n = rows
    sign = field.one
    d = field.one
    for c in range(n):
        pr = next((i for i in range(c, n) if A[i][c] != 0), None)
        if pr is None:
            return field.zero
        if pr != c:
            A[c], A[pr] = A[pr], A[c]
            sign = -sign
        piv = A[c][c]
        d = d * piv
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / piv
                A[i] = [a - f * x for a, x in zip(A[i], A[c])]
    return sign * d


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], field: Field) -> list[list]:
    ar, ac = _shape(A)
    br, bc = _shape(B)
    if ac != br:
        raise ShapeMismatch(f"cannot multiply {ar}x{ac} by {br}x{bc}")
    zero = field.zero
    return [[sum((A[i][k] * B[k][j] for k in range(ac)), zero) for j in range(bc)] for i in range(ar)]


def matvec(A: Sequence[Sequence], v: Sequence, field: Field) -> list:
    return [sum((a * x for a, x in zip(row, v)), field.zero) for row in A]


SparseVec = dict


def axpy(v: dict, c, w: dict) -> None:
    """In place ``v += c * w`` dropping zero entries."""
    for k, x in w.items():
        y = v.get(k)
        y = c * x if y is None else y + c * x
        if y == 0:
            v.pop(k, None)
        else:
            v[k] = y


class Echelon:
    """Reduced row echelon form of a growing subspace, on sparse vectors.

    Columns are arbitrary hashable labels.  The pivot of a new row is its
    largest label under ``key``, so with a monomial order the pivots are the
    leading monomials and the non-pivot labels are the standard monomials.

    With ``track=True`` each row also carries a *tag*: the linear combination
    of inserted input vectors it equals.  A dependent insert then returns the
    relation that witnessed the dependency.
    """

    def __init__(self, key: Callable[[Hashable], object], track: bool = False):
        self.key = key
        self.track = track
        self.rows: dict = {}
        self.tags: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, tag: dict | None = None):
        v = dict(v)
        tag = dict(tag) if tag is not None else None
        for col in [c for c in v if c in self.rows]:
            c = v.get(col)
            if c is None:
                continue
            axpy(v, -c, self.rows[col])
            if tag is not None:
                axpy(tag, -c, self.tags[col])
        return (v, tag) if self.track else v

    def add(self, v: dict, tag: dict | None = None):
        """Insert ``v``; return its pivot, or ``None`` if it was dependent.

        With tracking, use :meth:`add_tracked` to also see the relation.
        """
        return self.add_tracked(v, tag)[0]

    def add_tracked(self, v: dict, tag: dict | None = None):
        """Insert ``v``; return ``(pivot, None)`` or ``(None, relation)``."""
        if self.track:
            r, t = self.reduce(v, tag if tag is not None else {})
        else:
            r, t = self.reduce(v), None
        if not r:
            return None, t
        p = max(r, key=self.key)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        if t is not None:
            t = {k: x * inv for k, x in t.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                axpy(row, -c, r)
                if self.track:
                    axpy(self.tags[q], -c, t)
        self.rows[p] = r
        if self.track:
            self.tags[p] = t
        return p, None

    def contains(self, v: dict) -> bool:
        r = self.reduce(v)
        if self.track:
            r = r[0]
        return not r

    def pivots(self) -> list:
        return sorted(self.rows, key=self.key, reverse=True)

    def vectors(self) -> list[dict]:
        return [self.rows[p] for p in self.pivots()]
