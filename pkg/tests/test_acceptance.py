"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line (printed in the terminal
summary by conftest).  Where a stated value cannot be reproduced because the
computation gives something else, the criterion is reported FAIL with the
computed value, the reproducible parts are asserted, and the stated value is
pinned by a strict xfail test so that it cannot silently start passing.
"""
import random

import pytest

from agbug.algebra import (ArtinianAlgebra, algebra_from_dual, annihilator, dual_generator,
                           make_map, natural_projection, orient, thom_class)
from agbug.blowup import (blowup_ideal, bumd_status, cohomological_blowup, family_fiber,
                          gorenstein_criterion, xi_coefficients, xi_ring)
from agbug.errors import WrongDegree
from agbug.field import GF, QQ
from agbug.ideal import GradedIdeal, colon, ideal_equal, ideal_sum
from agbug.lefschetz import (conjugate, generic_lefschetz, jordan_type, lefschetz_status,
                             symbolic_lefschetz_determinant)
from agbug.linalg import rank
from agbug.poly import Ring, random_form
from agbug.structure import (bug_obstruction, ci_classification, connected_sum,
                             exact_zero_divisor_partner, is_compressed, mingen_homology,
                             verify_blowdown_as_connected_sum, verify_blowup_as_connected_sum,
                             watanabe_embed)
from agbug.toric import toric_presentation

import gen
from conftest import CRITERIA


def record(n, ok, detail=""):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    CRITERIA[n] = line
    print(line)


def ideal(R, *gens):
    return GradedIdeal(R, [R.parse(g) for g in gens])


def proportional(p, q):
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    m = q.leading_monomial()
    c = p.coefficient(m) / q.coefficient(m)
    return c != 0 and p == q.scale(c)


def shift_formula(HA, HT, n):
    """H(A) + sum_{i=1}^{n-1} H(T) shifted up by i, computed here from scratch."""
    size = max(len(HA), len(HT) + n - 1)
    out = [HA[i] if i < len(HA) else 0 for i in range(size)]
    for s in range(1, n):
        for i, h in enumerate(HT):
            out[i + s] += h
    return tuple(out)


def vec_in(A, p):
    return [c for d in range(A.top + 1) for c in A.coords(A.normal_form(p).part(d), d)]


def injective_on_basis(A, B, images):
    """Rank of the images of a basis of A inside B equals dim A."""
    rows = [vec_in(B, img) for img in images]
    return rank(rows, B.field) == A.dim


def instance_n2(rng, **kw):
    """Random instance with deg f >= 2, where the generator and CI statements apply."""
    while True:
        inst = gen.instance(rng, **kw)
        if inst.n >= 2:
            return inst


def is_exact_pair(A, a, b):
    def mrank(c):
        return rank([vec_in(A, c * v) for d in range(A.top + 1) for v in A.basis(d)], A.field)
    return A.is_zero(a * b) and mrank(a) + mrank(b) == A.dim


# 1 -------------------------------------------------------------------------

def test_criterion_01_hat_trichotomy():
    R = Ring.make(["x", "y"])
    A = algebra_from_dual(R.mirror().parse("X^2*Y^2"))
    T = orient(ArtinianAlgebra(ideal(R, "x^2", "y")), socle=R.parse("x"))
    pi = make_map(A, T, ["x", "0"])
    R1 = xi_ring(R)
    tau = thom_class(pi)
    c1 = gorenstein_criterion(pi, R1.parse("xi^3 + x*xi^2 + x^2*y + x*y^2"))
    c2 = gorenstein_criterion(pi, R1.parse("xi^3 + x*xi^2 + x*y^2"))
    c3 = gorenstein_criterion(pi, R1.parse("xi^3 + x*xi^2"))
    ok = (tau == R.parse("x*y^2")
          and c1.hilbert == (1, 3, 5, 3) and not c1.gorenstein
          and c2.hilbert == (1, 3, 5, 3, 1) and c2.gorenstein
          and c3.hilbert == (1, 3, 5, 3, 1) and sum(c3.socle_dims.values()) == 2)
    record(1, ok, f"tau = {tau}; H = {c1.hilbert} / {c2.hilbert} / {c3.hilbert} "
                  f"socle {c3.socle_dims}")
    assert ok


# 2 -------------------------------------------------------------------------

def catalecticant_hilbert(F):
    P = F.ring.primal()
    d = F.homogeneous_degree()
    return tuple(rank([[(P.monomial(a) * P.monomial(b)).contract(F).constant_term()
                        for b in P.monomials(d - i)] for a in P.monomials(i)], P.field)
                 for i in range(d + 1))


def test_criterion_02_duality_round_trip():
    bad = []
    for t, rng in enumerate(gen.rngs(2, 200)):
        field = QQ if t % 2 == 0 else GF(7)
        F = gen.dual_form(rng, field)
        A = ArtinianAlgebra(annihilator(F))
        H = A.hilbert
        if not proportional(dual_generator(A), F):
            bad.append((t, "round trip"))
        if H != H[::-1]:
            bad.append((t, "symmetry"))
        if t % 4 == 0 and H != catalecticant_hilbert(F):
            bad.append((t, "catalecticant"))
    record(2, not bad, f"200 forms over QQ and GF(7); failures {bad[:3]}")
    assert not bad


# 3 -------------------------------------------------------------------------

def test_criterion_03_hilbert_identity():
    bad = []
    for t, rng in enumerate(gen.rngs(3, 100)):
        inst = gen.instance(rng)
        A, T = inst.A, inst.T
        b = cohomological_blowup(natural_projection(A, T), inst.coeffs, inst.lam)
        At = b.tilde_A
        xi = At.ring.var(At.ring.nvars - 1)
        want_thom = At.normal_form(xi.scale(-1 / inst.lam))
        images = [v.embed(At.ring) for d in range(A.top + 1) for v in A.basis(d)]
        checks = {
            "hilbert": At.hilbert == shift_formula(A.hilbert, T.hilbert, inst.n),
            "beta": injective_on_basis(A, At, images),
            "thom": thom_class(b.pi_hat) == want_thom,
        }
        if not all(checks.values()):
            bad.append((t, checks))
    record(3, not bad, f"100 random blow-ups; failures {bad[:2]}")
    assert not bad


# 4 -------------------------------------------------------------------------

def test_criterion_04_blowup_conditions_agree():
    bad, valid, invalid = [], 0, 0
    for t, rng in enumerate(gen.rngs(4, 100)):
        inst = gen.instance(rng)
        if t % 2 == 0:
            f = inst.f()
        else:
            f = inst.f(constant=gen.nonzero_form(inst.R, inst.n, rng))
        st = bumd_status(inst.F, inst.G, inst.tau, f, inst.lam)
        conds = set(st.conditions.values())
        # condition (2) recomputed here from the dual form
        direct = ArtinianAlgebra(annihilator(st.dual.F_hat)).hilbert == shift_formula(
            inst.A.hilbert, inst.T.hilbert, inst.n)
        if len(conds) != 1 or direct != st.valid:
            bad.append(t)
        valid += st.valid
        invalid += not st.valid
    R = Ring.make(["x", "y"])
    Q = R.mirror()
    R1 = xi_ring(R)
    F, G, tau = Q.parse("X^2*Y^2"), Q.parse("X*Y"), R.parse("x*y")
    h_bad = bumd_status(F, G, tau, R1.parse("xi^2"), 1).dual.A_md.hilbert
    h_good = bumd_status(F, G, tau, R1.parse("xi^2 - x*y"), -1).dual.A_md.hilbert
    ok = not bad and valid and invalid and h_bad == (1, 3, 6, 3, 1) and h_good == (1, 3, 5, 3, 1)
    record(4, ok, f"{valid} valid / {invalid} invalid instances; fixture H {h_bad} vs {h_good}")
    assert ok


# 5 -------------------------------------------------------------------------

def connected_sum_conditions(F, H, sigma, top):
    """sigma o F = sigma o H != 0 and Ann(sigma o F) = Ann F + Ann H in every degree."""
    G = sigma.contract(F)
    if G.is_zero() or G != sigma.contract(H):
        return False
    return ideal_equal(annihilator(G), ideal_sum(annihilator(F), annihilator(H)), upto=top)


def blowup_cases():
    R2 = Ring.make(["x", "y"])
    R3 = Ring.make(["x", "y", "z"])
    Q2, Q3 = R2.mirror(), R3.mirror()
    X2, X3 = xi_ring(R2), xi_ring(R3)
    yield "4.6", Q2.parse("X^2*Y^2"), Q2.parse("X*Y"), R2.parse("x*y"), X2.parse("xi^2 - x*y"), -1
    yield "5.3", Q2.parse("X^2*Y^2"), Q2.parse("Y"), R2.parse("x^2*y"), \
        X2.parse("xi^3 - xi^2*y"), 2
    yield "5.5", Q3.parse("Z^2*X*Y - X^2*Y^2"), Q3.one(), R3.parse("z^2*x*y"), \
        X3.parse("xi^4 + z^2*x*y"), 1
    F66 = Q2.parse("X^2*Y^2")
    yield "6.6", F66, R2.parse("y^2").contract(F66), R2.parse("y^2"), X2.parse("xi^2 - y^2"), -1


def check_blowup_connected_sum(F, G, tau, f, lam):
    st = bumd_status(F, G, tau, f, lam)
    cs = verify_blowup_as_connected_sum(F, G, tau, f, lam)
    Q1 = f.ring.mirror()
    top = st.dual.A_md.top + 1
    conds = connected_sum_conditions(F.embed(Q1), st.dual.H, cs.sigma, top)
    same = ideal_equal(cs.connected_sum.connected.ideal, st.dual.A_md.ideal, upto=top)
    bd = verify_blowdown_as_connected_sum(st.dual.F_hat, st.dual.H)
    xi = f.ring.var(f.ring.nvars - 1)
    down_conds = connected_sum_conditions(st.dual.F_hat, -st.dual.H, xi, top)
    recovered = bd.connected_sum.connected.hilbert == algebra_from_dual(F).hilbert
    return conds and same and down_conds and recovered


def test_criterion_05_connected_sums():
    named = {name: check_blowup_connected_sum(*args) for name, *args in blowup_cases()}
    bad = []
    for t, rng in enumerate(gen.rngs(5, 50)):
        inst = gen.instance(rng)
        if not check_blowup_connected_sum(inst.F, inst.G, inst.tau, inst.f(), inst.lam):
            bad.append(t)
    ok = all(named.values()) and not bad
    record(5, ok, f"fixtures {named}; 50 random, failures {bad}")
    assert ok


# 6 -------------------------------------------------------------------------

def quartic_data():
    R = Ring.make(["x", "y", "z"])
    R1 = xi_ring(R)
    I = ideal(R, "x^4", "y^4", "z*x^2", "z*y^2", "z^4 - x^2*y^2")
    return I, R.parse("z^2 - x*y"), R1.parse("xi^2 - (z^2 - x*y)")


def square_data():
    R = Ring.make(["x", "y"])
    R1 = xi_ring(R)
    return ideal(R, "x^3", "y^3"), R.parse("y^2"), R1.parse("xi^2 - y^2")


def mingen_ok(I, tau, f):
    m = mingen_homology(I, tau, f)
    mu_b = blowup_ideal(I, tau, f).ideal.mu()
    mu_i, mu_c = I.mu(), colon(I, tau).mu()
    p1, p2 = m.phi1, m.phi2
    z = I.ring.field.zero

    def mul(A, B):
        if not A or not B:
            return []
        return [[sum((A[i][k] * B[k][j] for k in range(len(B))), z) for j in range(len(B[0]))]
                for i in range(len(A))]
    zero = all(x == 0 for row in mul(p1, p2) + mul(p2, p1) for x in row)
    eq = mu_b == mu_i + m.dim_H_prime + 1 == mu_c + m.dim_H + 1
    return zero and eq, mu_b, m


def test_criterion_06_minimal_generator_ledger():
    ok66, mu66, _ = mingen_ok(*square_data())
    ok67, mu67, _ = mingen_ok(*quartic_data())
    bad = []
    for t, rng in enumerate(gen.rngs(6, 100)):
        inst = instance_n2(rng)
        good, _, _ = mingen_ok(inst.A.ideal, inst.tau, inst.f())
        if not good:
            bad.append(t)
    attainable = ok66 and mu66 == 3 and ok67 and not bad
    stated = mu67 == 6
    record(6, attainable and stated,
           f"identities hold on both fixtures and 100 random; mu = {mu66} as stated for 6.6; "
           f"6.7 gives mu = {mu67}, stated 6")
    assert attainable


@pytest.mark.xfail(strict=True, reason="the blow-up ideal of the quartic CI has 8 minimal "
                                       "generators, not 6")
def test_criterion_06_stated_mu_six_for_the_quartic_blowup():
    I, tau, f = quartic_data()
    assert blowup_ideal(I, tau, f).ideal.mu() == 6


def test_linear_tau_collapses_the_generator_count():
    # n = 1: the blow-up ideal is I + (f), so mu = mu(I) + 1 whatever H' is
    rng = random.Random(6046)
    seen = 0
    for _ in range(40):
        inst = gen.instance(rng, n=1, nvars=3, degree=3)
        I = inst.A.ideal
        bi = blowup_ideal(I, inst.tau, inst.f())
        assert bi.ideal.mu() == I.mu() + 1
        assert bi.algebra.hilbert == inst.A.hilbert
        with pytest.raises(WrongDegree):
            mingen_homology(I, inst.tau, inst.f())
        with pytest.raises(WrongDegree):
            ci_classification(I, inst.tau, inst.f())
        seen += 1
    assert seen == 40


# 7 -------------------------------------------------------------------------

def ci_ok(I, tau, f):
    c = ci_classification(I, tau, f)
    A = ArtinianAlgebra(I)
    n = I.ring.nvars
    b_ci = blowup_ideal(I, tau, f).ideal.mu() == n + 1
    a_ci = I.mu() == n
    t_ci = colon(I, tau).mu() == n
    exact = c.partner is not None and is_exact_pair(A, tau, c.partner)
    if c.partner is None:
        exact = False
    agree = (c.blowup_is_CI, c.A_is_CI, c.T_is_CI, c.tau_exact) == (b_ci, a_ci, t_ci, exact)
    return agree and b_ci == (a_ci and exact) == (t_ci and exact), c


def test_criterion_07_complete_intersections():
    bad, kinds = [], set()
    for t, rng in enumerate(gen.rngs(7, 60)):
        inst = instance_n2(rng, max_vars=2 if t % 2 else 3)
        good, c = ci_ok(inst.A.ideal, inst.tau, inst.f())
        kinds.add(c.blowup_is_CI)
        if not good:
            bad.append(t)
    ok66, c66 = ci_ok(*square_data())
    ok67, c67 = ci_ok(*quartic_data())
    m67 = mingen_homology(*quartic_data())
    R = Ring.make(["x", "y"])
    A = ArtinianAlgebra(ideal(R, "x^3", "y^3"))
    p = exact_zero_divisor_partner(A, R.parse("y^2"))
    pair_a = p is not None and proportional(p, R.parse("y")) and is_exact_pair(A, R.parse("y^2"), p)
    S = Ring.make(["x", "y", "z"])
    B = ArtinianAlgebra(quartic_data()[0])
    q = exact_zero_divisor_partner(B, S.parse("z^2 - x*y"))
    attainable = (not bad and kinds == {True, False} and ok66 and c66.blowup_is_CI
                  and ok67 and not c67.blowup_is_CI and pair_a)
    stated = (m67.dim_H, m67.dim_H_prime) == (0, 0) and q is not None
    record(7, attainable and stated,
           f"three-way test agrees on 60 random and both fixtures; 6.6 CI, 6.7 not CI; "
           f"(y^2, y) exact; 6.7 gives dim H = {m67.dim_H}, dim H' = {m67.dim_H_prime} "
           f"(stated 0, 0) and z^2 - xy has partner {q} (stated z^2 + xy)")
    assert attainable


@pytest.mark.xfail(strict=True, reason="x^2 z^2 and y^2 z^2 give homology on both sides")
def test_criterion_07_stated_zero_homology_for_the_quartic_blowup():
    m = mingen_homology(*quartic_data())
    assert (m.dim_H, m.dim_H_prime) == (0, 0)


@pytest.mark.xfail(strict=True, reason="x^3 also annihilates z^2 - xy")
def test_criterion_07_stated_exact_pair_on_the_quartic():
    S = Ring.make(["x", "y", "z"])
    B = ArtinianAlgebra(quartic_data()[0])
    q = exact_zero_divisor_partner(B, S.parse("z^2 - x*y"))
    assert q is not None and proportional(q, S.parse("z^2 + x*y"))


# 8 -------------------------------------------------------------------------

def random_factored_ci(rng):
    while True:
        k = rng.randint(2, 3)
        R = gen.ring(k)
        fac = []
        for _ in range(k):
            parts = [gen.nonzero_form(R, rng.choice([1, 1, 2]), rng, 2)
                     for _ in range(rng.randint(2, 3 if k == 2 else 2))]
            fac.append(parts)
        gens = []
        for g in fac:
            p = R.one()
            for L in g:
                p = p * L
            gens.append(p)
        try:
            A = ArtinianAlgebra(GradedIdeal(R, gens))
        except Exception:
            continue
        degs = [p.homogeneous_degree() for p in gens]
        total = 1
        for d in degs:
            total *= d
        if A.dim == total:
            return R, fac, A


def test_criterion_08_quadratic_embedding():
    R = Ring.make(["x", "y"])
    x, y = R.gens()
    e = watanabe_embed(R, [[x, x, x], [y, y, y]])
    B = e.target
    first = (len(e.steps) == 2 and B.ring.nvars == 4 and B.hilbert == (1, 4, 6, 4, 1)
             and B.top == 4 and B.ideal.mu() == 4
             and all(g.homogeneous_degree() == 2 for g in B.ideal.minimal_generators()))
    bad = []
    for t, rng in enumerate(gen.rngs(8, 20)):
        S, fac, A = random_factored_ci(rng)
        emb = watanabe_embed(S, fac)
        T = emb.target
        degs = [g.homogeneous_degree() for g in T.ideal.minimal_generators()]
        soc = S.monomial(A.std(A.top)[0])
        good = (sum(degs) - 2 * len(degs) == 0 and len(degs) == T.ring.nvars
                and T.top == A.top and not T.is_zero(soc.embed(T.ring)))
        if not good:
            bad.append(t)
    ok = first and not bad
    record(8, ok, f"cubes: {len(e.steps)} steps, H = {B.hilbert}; 20 random, failures {bad}")
    assert ok


# 9 -------------------------------------------------------------------------

def test_criterion_09_compressed_obstruction():
    R = Ring.make(["x", "y"])
    A = orient(ArtinianAlgebra(ideal(R, "x^4", "y^3")), socle=R.parse("x^3*y^2"))
    T = orient(ArtinianAlgebra(ideal(R, "x^2 - x*y", "y^2")), socle=R.parse("x^2"))
    b = cohomological_blowup(natural_projection(A, T), [0, 0], 1)
    S = Ring.make(["x", "y", "z"])
    C = algebra_from_dual(random_form(S.mirror(), 6, random.Random(7), bound=9))
    ok = (b.tilde_A.hilbert == (1, 3, 6, 6, 3, 1) and is_compressed(b.tilde_A)
          and bug_obstruction(b.tilde_A) == "NoObstruction"
          and C.hilbert == (1, 3, 6, 10, 6, 3, 1) and is_compressed(C)
          and bug_obstruction(C) == "NotBUG")
    record(9, ok, f"blow-up H = {b.tilde_A.hilbert}, {bug_obstruction(b.tilde_A)}; "
                  f"sextic H = {C.hilbert}, {bug_obstruction(C)}")
    assert ok


# 10 ------------------------------------------------------------------------

def test_criterion_10_lefschetz_fixtures():
    R = Ring.make(["x", "y", "z", "u", "v"])
    Q = R.mirror()
    A = algebra_from_dual(Q.parse("X*U^2 + Y*U*V + Z*V^2"))
    T = algebra_from_dual(Q.parse("X"))
    perazzo_no_wlp = not generic_lefschetz(A, trials=5, seed=1).wlp
    b = cohomological_blowup(natural_projection(A, T), [R.zero()], 1)
    At = b.tilde_A
    R1 = At.ring
    g = generic_lefschetz(At, trials=5, seed=1)
    w = g.slp_witness
    ef = w is not None and w.coefficient((0, 0, 0, 0, 1, 0)) != 0 and \
        w.coefficient((0, 0, 0, 0, 0, 1)) != 0
    src = [R1.parse(s) for s in ("x", "y", "z", "u", "v", "xi")]
    tgt = [R1.parse(s) for s in ("u^2", "u*v", "v^2", "y*v", "y*u", "-x*xi")]
    sd = symbolic_lefschetz_determinant(At, 1, 1, list("abcdef"), src, tgt)
    det_ok = proportional(sd.determinant, sd.parameters.parse("f^2*e^4"))

    F = Q.parse("X*U^6 + Y*U^4*V^2 + Z*U^5*V")
    G = Q.parse("X*U^3 + Y*U*V^2 + Z*U^2*V")
    A8, T8 = algebra_from_dual(F), algebra_from_dual(G)
    ell = R.parse("3*x - 2*y + 5*z + 7*u - 4*v")
    st = bumd_status(F, G, R.parse("u^3"), xi_ring(R).parse("xi^3 - u^3"), -1)
    B8 = st.dual.A_md
    PB = jordan_type(B8, ell.embed(B8.ring) + B8.ring.parse("11*xi"))
    sd8 = symbolic_lefschetz_determinant(B8, 3, 1)
    want = (8,) + (6,) * 5 + (4,) * 6 + (2,) * 4 + (1,) * 2
    jordan_ok = (jordan_type(A8, ell) == (8, 6, 6, 6, 5, 5)
                 and jordan_type(T8, ell) == (5, 3, 3, 3, 2, 2) and PB == want)
    ok = g.slp and ef and perazzo_no_wlp and det_ok and jordan_ok and sd8.determinant.is_zero()
    record(10, ok, f"A~ SLP witness {w}; det = {sd.determinant}; blow-up Jordan type {PB}")
    assert ok


# 11 ------------------------------------------------------------------------

def test_criterion_11_characteristic_p_failure():
    p, d, k = 5, 7, 3
    R = Ring.make(["x", "y"], field=GF(p))
    Q = R.mirror()
    A = algebra_from_dual(Q.parse(f"X^{d} + Y^{d}"))
    T = algebra_from_dual(Q.parse(f"X^{k}"))
    b = cohomological_blowup(natural_projection(A, T), [0] * (d - k - 1), -1)
    gA = generic_lefschetz(A, "exhaustive")
    gT = generic_lefschetz(T, "exhaustive")
    gB = generic_lefschetz(b.tilde_A, "exhaustive")
    ok = gA.slp and gT.slp and not gB.slp and gB.tried == (p ** 3 - 1) // (p - 1)
    record(11, ok, f"(p, d, k) = {(p, d, k)}: A witness {gA.slp_witness}, T witness "
                   f"{gT.slp_witness}, {gB.tried} forms on A~, none strong Lefschetz")
    assert ok


# 12 ------------------------------------------------------------------------

def test_criterion_12_lefschetz_ascent():
    slp_total = slp_ok = wlp_total = wlp_ok = 0
    t = 0
    rngs = iter(gen.rngs(12, 500))
    while slp_total < 30:
        rng = next(rngs)
        inst = gen.instance(rng, max_vars=2 if t % 3 else 3, degree=rng.randint(2, 4))
        t += 1
        A, T = inst.A, inst.T
        gA = generic_lefschetz(A, trials=5, seed=t)
        gT = generic_lefschetz(T, trials=5, seed=t)
        b = cohomological_blowup(natural_projection(A, T), inst.coeffs, inst.lam)
        gB = None
        if gA.slp and gT.slp:
            gB = generic_lefschetz(b.tilde_A, trials=5, seed=t)
            slp_total += 1
            slp_ok += gB.slp
        if gA.wlp and gT.wlp and inst.n <= 2:
            gB = gB or generic_lefschetz(b.tilde_A, trials=5, seed=t)
            wlp_total += 1
            wlp_ok += gB.wlp
    ok = slp_ok == slp_total and wlp_ok == wlp_total and wlp_total > 0
    record(12, ok, f"SLP {slp_ok}/{slp_total}, WLP (n <= 2) {wlp_ok}/{wlp_total}")
    assert ok


# 13 ------------------------------------------------------------------------

def test_criterion_13_flat_family():
    bad, checked_zero = [], 0
    for t, rng in enumerate(gen.rngs(13, 20)):
        inst = gen.instance(rng, degree=rng.randint(3, 5) if t % 2 else None)
        pi = natural_projection(inst.A, inst.T)
        b = cohomological_blowup(pi, inst.coeffs, inst.lam)
        fibers = {c: family_fiber(pi, inst.coeffs, inst.lam, c) for c in (0, 1, 2, -3)}
        hs = {fib.algebra.hilbert for fib in fibers.values()}
        one = ideal_equal(fibers[1].algebra.ideal, b.tilde_A.ideal, upto=b.tilde_A.top + 1)
        zero_ok = True
        if inst.n >= 2 and inst.T.dim > 1:
            checked_zero += 1
            zero_ok = sum(fibers[0].algebra.socle_dims().values()) == 2
        nonzero_gor = all(fibers[c].algebra.is_gorenstein() for c in (1, 2, -3))
        if not (len(hs) == 1 and one and zero_ok and nonzero_gor):
            bad.append(t)
    ok = not bad and checked_zero > 0
    record(13, ok, f"20 random families, special fiber checked on {checked_zero}; "
                   f"failures {bad}")
    assert ok


# 14 ------------------------------------------------------------------------

def test_criterion_14_toric_fixtures():
    fans = {
        "P2": ([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)],
               (1, 1, 1), ["x1^3"]),
        "X2": ([(1, 0), (0, 1), (-1, -1), (0, -1)], [(0, 1), (1, 2), (2, 3), (3, 0)],
               (1, 2, 1), ["x1^2", "x2^2 - x2*x1"]),
        "X3": ([(1, 0), (0, 1), (-1, -1), (0, -1), (-1, 0)],
               [(0, 1), (1, 4), (4, 2), (2, 3), (3, 0)],
               (1, 3, 1), ["x1*x3", "x1^2", "x2*x3", "x2^2", "x3^2 + x1*x2"]),
        "P1xP1": ([(1, 0), (0, 1), (0, -1), (-1, 0)], [(0, 1), (1, 3), (3, 2), (2, 0)],
                  (1, 2, 1), ["x1^2", "x2^2"]),
    }
    names = {"P2": ["x1", "x2", "x3"], "X2": ["x1", "x2", "x3", "x4"],
             "X3": ["x1", "x2", "x3", "x4", "x5"], "P1xP1": ["x1", "x2", "x4", "x5"]}
    results = {}
    for key, (rays, cones, H, gens) in fans.items():
        tp = toric_presentation(rays, cones, names=names[key])
        results[key] = (tp.hilbert == H
                        and ideal_equal(tp.reduced_ideal, ideal(tp.reduced_ring, *gens)))
    R = Ring.make(["x", "xi"])
    A = ArtinianAlgebra(ideal(R, "xi^3 - 6*x*xi^2 + 12*x^2*xi - 8*x^3",
                              "3*xi^4 - 9*x*xi^3 + 6*x^2*xi^2 + 4*x^3*xi"))
    F = dual_generator(A)
    want = R.mirror().parse("X^5 - 3*X^3*Xi^2 - 10*X^2*Xi^3 - 24*X*Xi^4 - 48*Xi^5")
    # annihilation checked by contraction as well as by the computed generator
    kills = all(g.contract(want).is_zero() for g in A.ideal.gens)
    last = A.hilbert == (1, 2, 3, 3, 2, 1) and proportional(F, want) and kills
    ok = all(results.values()) and last
    record(14, ok, f"fans {results}; two-variable presentation H = {A.hilbert}")
    assert ok
