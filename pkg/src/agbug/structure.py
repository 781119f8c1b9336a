"""Structural consequences of blow-ups: connected sums, generators, CIs.

* connected sums of oriented AG algebras over a common quotient, checked
  through the dual generators: ``sigma o F = sigma o H != 0`` and
  ``Ann(sigma o F) = Ann(F) + Ann(H)``;
* the minimal generator complex ``I/mI <-> (I:tau)/m(I:tau)`` whose homology
  counts the minimal generators of a blow-up ideal;
* exact pairs of zero divisors and complete intersection tests;
* embedding complete intersections cut out by products of linear and
  quadratic forms into quadratic complete intersections by repeated blow-ups;
* compressed Hilbert functions, which obstruct being a blow-up.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb, prod
from typing import Sequence

from .algebra import (ArtinianAlgebra, AlgebraMap, OrientedAlgebra, algebra_from_dual,
                      annihilator, orient, same_ideal, thom_class)
from .blowup import blowup_ideal, bumd_status, split_monic, xi_ring
from .errors import (ConditionFailed, InvariantViolation, NotFactored, NotRegularSequence,
                     RingMismatch, WrongDegree)
from .ideal import (GradedIdeal, colon, first_difference, ideal_intersection, ideal_sum)
from .linalg import kernel, rank, rref
from .poly import Polynomial, Ring


# connected sums -------------------------------------------------------------

@dataclass
class ConnectedSum:
    F: Polynomial
    H: Polynomial
    sigma: Polynomial
    T: OrientedAlgebra
    A: OrientedAlgebra
    B: OrientedAlgebra
    fibered: ArtinianAlgebra
    connected: OrientedAlgebra
    tau_A: Polynomial
    tau_B: Polynomial
    checks: dict = dc_field(default_factory=dict)


def connected_sum(F: Polynomial, H: Polynomial, sigma: Polynomial) -> ConnectedSum:
    """Connected sum ``A #_T B`` of ``A = R/Ann F`` and ``B = R/Ann H`` over ``T``."""
    if F.ring != H.ring or not F.ring.dual:
        raise RingMismatch("F and H must be forms in the same dual ring")
    if sigma.ring != F.ring.primal():
        raise RingMismatch("sigma must live in the primal ring")
    d = F.homogeneous_degree()
    if H.homogeneous_degree() != d:
        raise WrongDegree("F and H must have the same degree")
    if F.is_zero() or H.is_zero() or _proportional_forms(F, H):
        raise ConditionFailed(0, "F and H must be linearly independent")
    n = sigma.homogeneous_degree()
    G = sigma.contract(F)
    if G != sigma.contract(H) or G.is_zero():
        raise ConditionFailed(1, f"sigma o F = {G}, sigma o H = {sigma.contract(H)}")
    A = algebra_from_dual(F)
    B = algebra_from_dual(H)
    T = algebra_from_dual(G)
    summed = ideal_sum(A.ideal, B.ideal)
    bad = first_difference(T.ideal, summed, d + 1)
    if bad is not None:
        raise ConditionFailed(2, f"Ann(sigma o F) differs from Ann F + Ann H in degree {bad}")
    fib = ArtinianAlgebra(ideal_intersection(A.ideal, B.ideal))
    con = algebra_from_dual(F - H)
    k = T.top
    checks = {
        "fibered_hilbert": all(fib.H(i) == A.H(i) + B.H(i) - T.H(i) for i in range(d + 1)),
        "connected_hilbert": all(con.H(i) == fib.H(i) - T.H(i - n) for i in range(d + 1)),
        "socle_degrees": k == d - n,
    }
    R = A.ring
    tau_A = thom_class(AlgebraMap(A, T, R.gens(), check=False))
    tau_B = thom_class(AlgebraMap(B, T, R.gens(), check=False))
    checks["thom_classes"] = (tau_A == A.normal_form(sigma) and tau_B == B.normal_form(sigma))
    if not all(checks.values()):
        raise InvariantViolation(f"connected sum invariants failed: {checks}")
    return ConnectedSum(F, H, sigma, T, A, B, fib, con, tau_A, tau_B, checks)


def _proportional_forms(F: Polynomial, H: Polynomial) -> bool:
    m = F.leading_monomial()
    c = H.coefficient(m)
    return c != 0 and H.scale(F.coefficient(m) / c) == F


@dataclass
class BlowupConnectedSum:
    connected_sum: ConnectedSum
    sigma: Polynomial
    checks: dict


def verify_blowup_as_connected_sum(F: Polynomial, G: Polynomial, tau: Polynomial,
                                   f: Polynomial, lam=1) -> BlowupConnectedSum:
    """``A~ = A #_T B`` with ``B = R[xi]/Ann(lam Xi G~)`` and ``sigma = f - r``."""
    st = bumd_status(F, G, tau, f, lam)
    if not st.valid:
        raise ConditionFailed(4, "the data do not define a blow-up")
    db = st.dual
    R1 = f.ring
    Q1 = R1.mirror()
    sigma = f - st.r4.embed(R1)
    cs = connected_sum(F.embed(Q1), db.H, sigma)
    xi = R1.var(R1.nvars - 1)
    base_G = [g.embed(R1) for g in db.T.ideal.gens]
    top = db.A_md.top + 1
    checks = {
        "connected_is_blowup": same_ideal(cs.connected.ideal, db.A_md.ideal, top),
        "B_presentation": same_ideal(cs.B.ideal, GradedIdeal(R1, base_G + [xi * f]), top),
        "T_presentation": same_ideal(cs.T.ideal, GradedIdeal(R1, base_G + [xi]), top),
    }
    if not all(checks.values()):
        raise InvariantViolation(f"blow-up is not the expected connected sum: {checks}")
    return BlowupConnectedSum(cs, sigma, checks)


def verify_blowdown_as_connected_sum(F_tilde: Polynomial, H: Polynomial) -> BlowupConnectedSum:
    """``A = A~ #_(T~) B'`` with ``sigma = xi``: recovers ``Ann_R(F) R[xi] + (xi)``."""
    R1 = F_tilde.ring.primal()
    xi = R1.var(R1.nvars - 1)
    cs = connected_sum(F_tilde, -H, xi)
    F = F_tilde + H
    if any(m[-1] for m in F.terms):
        raise ConditionFailed(1, "F~ + H still involves Xi")
    R = Ring(R1.field, R1.names[:-1], R1.weights[:-1])
    AF = annihilator(F.restrict(R.mirror()))
    expected = GradedIdeal(R1, [g.embed(R1) for g in AF.gens] + [xi])
    checks = {"recovers_A": same_ideal(cs.connected.ideal, expected, cs.connected.top + 1)}
    if not all(checks.values()):
        raise InvariantViolation(f"blow-down does not recover A: {checks}")
    return BlowupConnectedSum(cs, xi, checks)


# minimal generators ------------------------------------------------------------

def _mingen_basis(I: GradedIdeal) -> list[tuple]:
    """``(degree, pivot)`` labels of the chosen minimal generators."""
    return [(g.homogeneous_degree(), g.leading_monomial()) for g in I.minimal_generators()]


@dataclass
class MingenHomology:
    phi1: list
    phi2: list
    dim_H: int
    dim_H_prime: int
    mu_I: int
    mu_colon: int
    mu_blowup: int
    U: list
    W: list
    checks: dict


def _map_matrix(src: list, tgt_ideal: GradedIdeal, images: list, tgt: list, field) -> list:
    index = {lab: i for i, lab in enumerate(tgt)}
    M = [[field.zero] * len(src) for _ in tgt]
    for j, img in enumerate(images):
        if img.is_zero():
            continue
        d = img.homogeneous_degree()
        for piv, c in tgt_ideal.mingen_coords(img.terms, d).items():
            M[index[(d, piv)]][j] = c
    return M


def _mat_rank(M, field):
    return rank(M, field) if M and M[0] else 0


def _needs_n_at_least_2(tau: Polynomial) -> None:
    # with deg f = 1, xi*w = w*f - lam*tau*w lies in m~I, so the generator count collapses
    # to mu(I) + 1 and the blow-up is A itself
    if tau.homogeneous_degree() == 1:
        raise WrongDegree("needs deg tau >= 2; a linear tau gives a blow-up isomorphic to A")


def mingen_homology(I: GradedIdeal, tau: Polynomial, f: Polynomial) -> MingenHomology:
    """The complex ``phi1: I/mI -> J/mJ`` (inclusion), ``phi2: J/mJ -> I/mI`` (times tau)."""
    _needs_n_at_least_2(tau)
    field = I.ring.field
    J = colon(I, tau)
    gi, gj = I.minimal_generators(), J.minimal_generators()
    li, lj = _mingen_basis(I), _mingen_basis(J)
    phi1 = _map_matrix(li, J, gi, lj, field)
    phi2 = _map_matrix(lj, I, [tau * g for g in gj], li, field)
    z = field.zero

    def mul(A, B, rows, cols, inner):
        return [[sum((A[i][k] * B[k][j] for k in range(inner)), z) for j in range(cols)]
                for i in range(rows)]
    c1 = mul(phi1, phi2, len(lj), len(lj), len(li))
    c2 = mul(phi2, phi1, len(li), len(li), len(lj))
    is_complex = all(x == 0 for row in c1 + c2 for x in row)
    r1, r2 = _mat_rank(phi1, field), _mat_rank(phi2, field)
    dim_H = (len(li) - r1) - r2
    dim_Hp = (len(lj) - r2) - r1
    U = [gi[c] for c in rref(phi1, field)[1]] if phi1 and phi1[0] else []
    W = [gj[c] for c in rref(phi2, field)[1]] if phi2 and phi2[0] else []
    bi = blowup_ideal(I, tau, f)
    mu_b = bi.ideal.mu()
    checks = {
        "complex": is_complex,
        "count_via_H_prime": mu_b == len(li) + dim_Hp + 1,
        "count_via_H": mu_b == len(lj) + dim_H + 1,
    }
    if not all(checks.values()):
        raise InvariantViolation(f"minimal generator count failed: {checks}")
    return MingenHomology(phi1, phi2, dim_H, dim_Hp, len(li), len(lj), mu_b, U, W, checks)


# exact zero divisors and complete intersections -------------------------------

def exact_zero_divisor_partner(A: ArtinianAlgebra, a: Polynomial) -> Polynomial | None:
    """``b`` with ``(0:a) = (b)`` and ``(0:b) = (a)``, or ``None``."""
    a = A.normal_form(a)
    if a.is_zero() or 0 in a.degrees():
        raise ValueError("a must be a nonzero element of positive degree")
    if not a.is_homogeneous():
        raise ValueError("a must be homogeneous")
    I = A.ideal
    J = colon(I, a)
    reps = []
    for d in range(A.top + 1):
        pj = J.piece(d)
        if not pj.rows:
            continue
        from .ideal import echelon_piece
        sub = echelon_piece(A.ring, d, [*I.piece(d).rows.values(), *J.m_piece(d).rows.values()])
        for m in sorted(pj.rows, key=A.ring.key, reverse=True):
            if m not in sub.rows:
                reps.append(Polynomial(A.ring, pj.rows[m]))
    if len(reps) != 1:
        return None
    b = A.normal_form(reps[0])
    Jb = colon(I, b)
    Ia = GradedIdeal(A.ring, I.gens + [a]) if I._gens is not None else \
        ideal_sum(I, GradedIdeal(A.ring, [a]))
    if not same_ideal(Jb, Ia, A.top + 1):
        return None
    return b


def is_complete_intersection(I: GradedIdeal) -> bool:
    return I.mu() == I.ring.nvars


@dataclass
class CIClassification:
    A_is_CI: bool
    T_is_CI: bool
    blowup_is_CI: bool
    tau_exact: bool
    partner: Polynomial | None
    mu: dict


def ci_classification(I: GradedIdeal, tau: Polynomial, f: Polynomial) -> CIClassification:
    """Complete intersection status of ``A``, ``T = R/(I:tau)`` and the blow-up."""
    _needs_n_at_least_2(tau)
    A = ArtinianAlgebra(I)
    J = colon(I, tau)
    bi = blowup_ideal(I, tau, f)
    partner = exact_zero_divisor_partner(A, tau)
    exact = partner is not None
    a_ci = is_complete_intersection(I)
    t_ci = is_complete_intersection(J)
    b_ci = is_complete_intersection(bi.ideal)
    c1, c2, c3 = b_ci, a_ci and exact, t_ci and exact
    if not (c1 == c2 == c3):
        raise InvariantViolation(f"complete intersection tests disagree: {c1}, {c2}, {c3}")
    return CIClassification(a_ci, t_ci, b_ci, exact, partner,
                            {"I": I.mu(), "colon": J.mu(), "blowup": bi.ideal.mu()})


# embedding into quadratic complete intersections -------------------------------

_NAMES = ("xi", "eta", "zeta")


def _fresh(ring: Ring, k: int) -> str:
    cands = list(_NAMES) + [f"xi{j}" for j in range(1, 1000)]
    used = set(ring.names)
    fresh = [c for c in cands if c not in used]
    return fresh[0]


def defect(degrees: Sequence[int]) -> int:
    return sum(degrees) - 2 * len(degrees)


@dataclass
class EmbedStep:
    ring: Ring
    factored: list
    tau: Polynomial
    new_variable: str
    hilbert: tuple
    defect: int


@dataclass
class WatanabeEmbedding:
    source: ArtinianAlgebra
    target: ArtinianAlgebra
    factored: list
    steps: list
    checks: dict


def _product(factors, ring):
    out = ring.one()
    for f in factors:
        out = out * f
    return out


def watanabe_embed(ring: Ring, factored: Sequence[Sequence[Polynomial]]) -> WatanabeEmbedding:
    """Blow up along quadratic factors until every generator is quadratic."""
    if not ring.standard:
        raise NotFactored("needs the standard grading")
    fac = []
    for gen in factored:
        gen = list(gen)
        if not gen:
            raise NotFactored("empty factor list")
        for L in gen:
            if L.ring != ring:
                raise RingMismatch(f"factor {L} is not in {ring}")
            if L.degrees() not in ({1}, {2}):
                raise NotFactored(f"factor {L} is not a linear or quadratic form")
        fac.append(gen)
    gens = [_product(g, ring) for g in fac]
    degs = [g.homogeneous_degree() for g in gens]
    if any(d < 2 for d in degs):
        raise NotFactored("generators must have degree at least 2")
    I = GradedIdeal(ring, gens)
    try:
        A = ArtinianAlgebra(I)
    except Exception as e:
        raise NotRegularSequence(str(e)) from e
    if len(gens) != ring.nvars or I.mu() != ring.nvars or A.dim != prod(degs):
        raise NotRegularSequence(f"{I} is not generated by a regular sequence")
    soc = A.ring.monomial(A.std(A.top)[0])
    steps = []
    cur_ring, cur = ring, fac
    cur_I, cur_A = I, A
    checks = {"steps_ok": True}
    while defect([sum(L.homogeneous_degree() for L in g) for g in cur]) > 0:
        degs = [sum(L.homogeneous_degree() for L in g) for g in cur]
        idx = degs.index(max(degs))
        chosen = cur[idx]
        q = next((i for i, L in enumerate(chosen) if L.homogeneous_degree() == 2), None)
        if q is not None:
            tau, rest = chosen[q], chosen[:q] + chosen[q + 1:]
        else:
            tau, rest = chosen[0] * chosen[1], chosen[2:]
        name = _fresh(cur_ring, len(steps))
        R1 = xi_ring(cur_ring, name)
        xi = R1.var(R1.nvars - 1)
        fR = xi ** 2 - tau.embed(R1)
        new = [[L.embed(R1) for L in g] for i, g in enumerate(cur) if i != idx]
        new.append([xi] + [L.embed(R1) for L in rest])
        new.append([fR])
        new_I = GradedIdeal(R1, [_product(g, R1) for g in new])
        bi = blowup_ideal(cur_I, tau, fR)
        new_A = ArtinianAlgebra(new_I)
        old_def = defect(degs)
        new_def = defect([sum(L.homogeneous_degree() for L in g) for g in new])
        ok = (same_ideal(new_I, bi.ideal, new_A.top + 1)
              and new_def == old_def - 1
              and new_A.top == cur_A.top
              and new_I.mu() == R1.nvars
              and not new_A.is_zero(soc.embed(R1)))
        if not ok:
            checks["steps_ok"] = False
            raise InvariantViolation(f"embedding step {len(steps) + 1} failed")
        steps.append(EmbedStep(R1, new, tau, name, new_A.hilbert, new_def))
        cur_ring, cur, cur_I, cur_A = R1, new, new_I, new_A
    B = cur_A
    checks["quadratic"] = all(sum(L.homogeneous_degree() for L in g) == 2 for g in cur)
    checks["same_socle_degree"] = B.top == A.top
    checks["injective"] = not B.is_zero(soc.embed(B.ring))
    if not all(checks.values()):
        raise InvariantViolation(f"embedding checks failed: {checks}")
    return WatanabeEmbedding(A, B, cur, steps, checks)


# compressed algebras -------------------------------------------------------------

def is_compressed(A: ArtinianAlgebra) -> bool:
    if not A.ring.standard or not A.is_gorenstein():
        return False
    e, d = A.H(1), A.top
    for i in range(d + 1):
        want = comb(e - 1 + i, e - 1) if i <= d // 2 else A.H(d - i)
        if A.H(i) != want:
            return False
    return True


def bug_obstruction(A: ArtinianAlgebra) -> str:
    """``"NotBUG"`` when compressedness rules out being a blow-up."""
    e, d = A.H(1), A.top
    if is_compressed(A) and e >= 3 and (d == 4 or d >= 6):
        return "NotBUG"
    return "NoObstruction"
