"""Lefschetz properties through exact ranks of multiplication maps.

For a linear form ``l`` the map ``x l^j: A_i -> A_(i+j)`` is assembled in
standard monomial bases.  ``l`` is strong Lefschetz when every such map has
maximal rank and weak Lefschetz when those with ``j = 1`` do.  The Jordan
type of multiplication by ``l`` comes from ranks of powers:
``#{parts >= k} = rank(L^(k-1)) - rank(L^k)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from math import factorial
from typing import Sequence

from .algebra import ArtinianAlgebra
from .errors import EnumerationTooLarge, InvariantViolation, NotSquare, WrongDegree
from .ideal import mono_mul
from .linalg import det as field_det, rank, solve
from .poly import Polynomial, Ring


def _times(A: ArtinianAlgebra, ell: Polynomial, v: dict, d: int) -> dict:
    prod: dict = {}
    for m, c in v.items():
        for k, x in ell.terms.items():
            mm = mono_mul(m, k)
            prod[mm] = prod.get(mm, 0) + c * x
    return A.nf_vec({k: x for k, x in prod.items() if x != 0}, d + 1)


def _check_linear(A: ArtinianAlgebra, ell: Polynomial) -> None:
    if ell.ring != A.ring:
        raise WrongDegree(f"{ell} is not in {A.ring}")
    if not ell.is_zero() and ell.degrees() != {1}:
        raise WrongDegree(f"{ell} is not a linear form")


def power_images(A: ArtinianAlgebra, ell: Polynomial, i: int) -> list[list[dict]]:
    """``images[j][s]`` = normal form of ``l^j * s`` for each standard ``s`` of degree i."""
    cur = [{s: A.field.one} for s in A.std(i)]
    out = [cur]
    for j in range(1, A.top - i + 1):
        cur = [_times(A, ell, v, i + j - 1) for v in cur]
        out.append(cur)
    return out


def multiplication_matrix(A: ArtinianAlgebra, ell: Polynomial, i: int, j: int = 1) -> list[list]:
    """Matrix of ``x l^j: A_i -> A_(i+j)``; rows index ``A_(i+j)``, columns ``A_i``."""
    _check_linear(A, ell)
    tgt = A.std(i + j)
    if not tgt or not A.std(i):
        return [[] for _ in tgt]
    imgs = power_images(A, ell, i)[j]
    z = A.field.zero
    return [[v.get(t, z) for v in imgs] for t in tgt]


def rank_table(A: ArtinianAlgebra, ell: Polynomial) -> dict:
    """``(i, j) -> rank`` of ``x l^j: A_i -> A_(i+j)`` for ``j >= 1``."""
    _check_linear(A, ell)
    out = {}
    z = A.field.zero
    for i in range(A.top + 1):
        if not A.std(i):
            continue
        imgs = power_images(A, ell, i)
        for j in range(1, A.top - i + 1):
            tgt = A.std(i + j)
            if not tgt:
                out[(i, j)] = 0
                continue
            M = [[v.get(t, z) for v in imgs[j]] for t in tgt]
            out[(i, j)] = rank(M, A.field)
    return out


def _partition_from_counts(counts: list[int]) -> tuple:
    parts = []
    for k in range(1, len(counts)):
        exact = counts[k] - (counts[k + 1] if k + 1 < len(counts) else 0)
        parts.extend([k] * exact)
    return tuple(sorted(parts, reverse=True))


def jordan_type(A: ArtinianAlgebra, ell: Polynomial, ranks: dict | None = None) -> tuple:
    ranks = rank_table(A, ell) if ranks is None else ranks
    rk = [A.dim]
    for k in range(1, A.top + 2):
        rk.append(sum(r for (i, j), r in ranks.items() if j == k))
    counts = [0] + [rk[k - 1] - rk[k] for k in range(1, len(rk))]
    return _partition_from_counts(counts)


def jordan_type_of_matrix(M: list[list], field) -> tuple:
    """Jordan type of a nilpotent square matrix from ranks of its powers."""
    n = len(M)
    if n == 0:
        return ()
    rk = [n]
    P = [list(r) for r in M]
    while rk[-1] > 0:
        rk.append(rank(P, field))
        if len(rk) > n + 1:
            raise ValueError("matrix is not nilpotent")
        P = [[sum((P[i][k] * M[k][j] for k in range(n)), field.zero) for j in range(n)]
             for i in range(n)]
    counts = [0] + [rk[k - 1] - rk[k] for k in range(1, len(rk))]
    return _partition_from_counts(counts)


def conjugate(partition: Sequence[int]) -> tuple:
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= k) for k in range(1, max(parts) + 1))


def hilbert_combinatorics(H: Sequence[int]) -> tuple:
    """``(conjugate of H, Sperner number)``; ``H`` read as a partition."""
    return conjugate(sorted(H, reverse=True)), max(H, default=0)


def is_unimodal(H: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(H) and H[k] <= H[k + 1]:
        k += 1
    while k + 1 < len(H) and H[k] >= H[k + 1]:
        k += 1
    return k == len(H) - 1


def dominates(P: Sequence[int], Q: Sequence[int]) -> bool:
    """``P >= Q`` in dominance order (equal sizes assumed)."""
    sp = sq = 0
    for k in range(max(len(P), len(Q))):
        sp += P[k] if k < len(P) else 0
        sq += Q[k] if k < len(Q) else 0
        if sp < sq:
            return False
    return True


@dataclass
class LefschetzStatus:
    slp: bool
    wlp: bool
    failing: tuple | None
    jordan: tuple
    conjugate: tuple
    sperner: int
    cross_checked: bool


def lefschetz_status(A: ArtinianAlgebra, ell: Polynomial) -> LefschetzStatus:
    ranks = rank_table(A, ell)
    failing = None
    slp = wlp = True
    for (i, j), r in sorted(ranks.items(), key=lambda t: (t[0][1], t[0][0])):
        want = min(A.H(i), A.H(i + j))
        if r != want:
            slp = False
            if j == 1:
                wlp = False
            if failing is None:
                failing = (i, j, r, want)
    P = jordan_type(A, ell, ranks)
    conj, sperner = hilbert_combinatorics(A.hilbert)
    cross = False
    if A.ring.standard and is_unimodal(A.hilbert) and A.is_gorenstein():
        cross = True
        if slp != (P == conj) or wlp != (len(P) == sperner):
            raise InvariantViolation(
                f"rank tests (slp={slp}, wlp={wlp}) disagree with Jordan type {P}")
    return LefschetzStatus(slp, wlp, failing, P, conj, sperner, cross)


@dataclass
class GenericLefschetz:
    slp: bool
    wlp: bool
    slp_witness: Polynomial | None
    wlp_witness: Polynomial | None
    jordan_types: list
    maximal: list
    tried: int
    strategy: str = ""
    statuses: list = dc_field(default_factory=list, repr=False)


def linear_variables(A: ArtinianAlgebra) -> list[int]:
    return [i for i, w in enumerate(A.ring.weights) if w == 1]


def _linear_form(A, idx, coeffs) -> Polynomial:
    t = {}
    for i, c in zip(idx, coeffs):
        if c != 0:
            e = [0] * A.ring.nvars
            e[i] = 1
            t[tuple(e)] = A.field(c)
    return Polynomial(A.ring, t)


def _candidates_exhaustive(A, idx, cap):
    p = A.field.p
    if p == 0:
        raise ValueError("exhaustive search needs a prime field")
    if p ** len(idx) > cap:
        raise EnumerationTooLarge(f"{p}^{len(idx)} linear forms exceed the cap {cap}")
    for vec in iproduct(range(p), repeat=len(idx)):
        first = next((c for c in vec if c), None)
        if first == 1:
            yield _linear_form(A, idx, vec)


def generic_lefschetz(A: ArtinianAlgebra, strategy: str = "random", trials: int = 5,
                      bound: int = 100, seed: int = 0, cap: int = 100_000) -> GenericLefschetz:
    """Look for Lefschetz elements among random or all linear forms."""
    idx = linear_variables(A)
    if strategy == "random":
        # one generator per trial, so trials do not depend on each other
        cands = []
        for t in range(trials):
            rng = random.Random(seed * 1_000_003 + t)
            cands.append(_linear_form(A, idx, [rng.randint(-bound, bound) for _ in idx]))
    elif strategy == "exhaustive":
        cands = list(_candidates_exhaustive(A, idx, cap))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    slp_w = wlp_w = None
    types: list = []
    statuses = []
    for ell in cands:
        st = lefschetz_status(A, ell)
        statuses.append((ell, st))
        if st.slp and slp_w is None:
            slp_w = ell
        if st.wlp and wlp_w is None:
            wlp_w = ell
        if st.jordan not in types:
            types.append(st.jordan)
    types.sort(reverse=True)
    maximal = [P for P in types if not any(Q != P and dominates(Q, P) for Q in types)]
    return GenericLefschetz(slp_w is not None, wlp_w is not None, slp_w, wlp_w, types,
                            maximal, len(cands), strategy, statuses)


# symbolic determinants --------------------------------------------------------

def _exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient of an exact polynomial division."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = a.ring.zero()
    r = a
    lb = b.leading_monomial()
    cb = b.terms[lb]
    while not r.is_zero():
        lr = r.leading_monomial()
        if any(x < y for x, y in zip(lr, lb)):
            raise InvariantViolation("polynomial division was not exact")
        m = tuple(x - y for x, y in zip(lr, lb))
        t = a.ring.monomial(m, r.terms[lr] / cb)
        q = q + t
        r = r - t * b
    return q


def poly_det(M: list[list[Polynomial]], ring: Ring) -> Polynomial:
    """Determinant by fraction-free Bareiss elimination with exact division."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquare(f"{n}x{len(M[0]) if M else 0} matrix has no determinant")
    if n == 0:
        return ring.one()
    A = [list(row) for row in M]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            cands = [i for i in range(k + 1, n) if not A[i][k].is_zero()]
            if not cands:
                return ring.zero()
            i = min(cands, key=lambda i: len(A[i][k].terms))
            A[k], A[i] = A[i], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * A[i][j] - A[i][k] * A[k][j]
                A[i][j] = _exact_div(num, prev) if not num.is_zero() else ring.zero()
            A[i][k] = ring.zero()
        prev = piv
    d = A[n - 1][n - 1]
    return d if sign == 1 else -d


@dataclass
class SymbolicDeterminant:
    matrix: list
    determinant: Polynomial
    parameters: Ring
    ell: Polynomial


def _multinomials(nv: int, j: int):
    def rec(i, left):
        if i == nv - 1:
            yield (left,)
            return
        for e in range(left, -1, -1):
            for rest in rec(i + 1, left - e):
                yield (e,) + rest
    for alpha in rec(0, j):
        c = factorial(j)
        for e in alpha:
            c //= factorial(e)
        yield alpha, c


def symbolic_lefschetz_determinant(A: ArtinianAlgebra, i: int, j: int | None = None,
                                   params: Sequence[str] | None = None,
                                   source_basis: Sequence[Polynomial] | None = None,
                                   target_basis: Sequence[Polynomial] | None = None
                                   ) -> SymbolicDeterminant:
    """Determinant of ``x l^j: A_i -> A_(i+j)`` for ``l = sum a_k x_k`` with symbolic ``a_k``."""
    if j is None:
        j = A.top - 2 * i
    idx = linear_variables(A)
    if params is None:
        params = [chr(ord("a") + k) for k in range(len(idx))]
    if len(params) != len(idx):
        raise ValueError("one parameter per degree-one variable")
    P = Ring.make(params, field=A.field)
    src, tgt = A.std(i), A.std(i + j)
    if len(src) != len(tgt):
        raise NotSquare(f"A_{i} has dimension {len(src)} but A_{i + j} has {len(tgt)}")
    std_M = [[P.zero() for _ in src] for _ in tgt]
    tindex = {t: r for r, t in enumerate(tgt)}
    for alpha, c in _multinomials(len(idx), j):
        e = [0] * A.ring.nvars
        for k, a in zip(idx, alpha):
            e[k] = a
        coeff = P.monomial(alpha, c)
        for col, s in enumerate(src):
            v = A.nf_vec({mono_mul(s, tuple(e)): A.field.one}, i + j)
            for t, x in v.items():
                std_M[tindex[t]][col] = std_M[tindex[t]][col] + coeff.scale(x)
    M = std_M
    if source_basis is not None or target_basis is not None:
        Bs = [A.coords(b, i) for b in source_basis] if source_basis else \
            [[A.field.one if r == k else A.field.zero for r in range(len(src))]
             for k in range(len(src))]
        # columns of M in the new source basis
        cols = []
        for b in Bs:
            cols.append([sum((M[r][k] * b[k] for k in range(len(src))), P.zero())
                         for r in range(len(tgt))])
        if target_basis:
            Bt = [A.coords(b, i + j) for b in target_basis]
            Bt_mat = [list(r) for r in zip(*Bt)]
            new_cols = []
            for col in cols:
                # solve Bt_mat * y = col coefficientwise in the parameter monomials
                mons = sorted({m for p in col for m in p.terms})
                ys = [P.zero() for _ in tgt]
                for m in mons:
                    rhs = [p.coefficient(m) for p in col]
                    y = solve(Bt_mat, rhs, A.field)
                    if y is None:
                        raise ValueError("target basis does not span A_(i+j)")
                    for r, val in enumerate(y):
                        ys[r] = ys[r] + P.monomial(m, val)
                new_cols.append(ys)
            cols = new_cols
        M = [list(r) for r in zip(*cols)]
    ell = _linear_form(A, idx, [1] * len(idx))
    return SymbolicDeterminant(M, poly_det(M, P), P, ell)


def evaluate_matrix(M: list[list[Polynomial]], values: Sequence) -> list[list]:
    out = []
    for row in M:
        r = []
        for p in row:
            total = p.ring.field.zero
            for m, c in p.terms.items():
                t = c
                for v, e in zip(values, m):
                    t = t * (p.ring.field(v) ** e)
                total = total + t
            r.append(total)
        out.append(r)
    return out


def numeric_det(M, field):
    return field_det(M, field)
