import random

import pytest
from hypothesis import given, settings, strategies as st

from agbug.algebra import ArtinianAlgebra, algebra_from_dual, annihilator, natural_projection
from agbug.blowup import (blowup_ideal, bumd_status, cohomological_blowup, construct_hat,
                          family_fiber, g_dual_polynomial, gorenstein_criterion, shifted_sum,
                          split_monic, xi_coefficients, xi_ring)
from agbug.errors import ThomMismatch, WrongDegree
from agbug.ideal import ideal_equal
from agbug.linalg import rank
from agbug.poly import Ring

import gen

seeds = st.integers(0, 10**6)


def test_shifted_sum_small_cases():
    assert shifted_sum((1, 2, 1), (1,), 2) == (1, 3, 1)
    assert shifted_sum((1, 2, 3, 2, 1), (1, 2, 1), 2) == (1, 3, 5, 3, 1)
    assert shifted_sum((1, 1, 1, 1), (1, 1), 1) == (1, 1, 1, 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_three_routes_to_the_blowup_agree(seed):
    inst = gen.instance(random.Random(seed))
    f = inst.f()
    b = cohomological_blowup(inst.pi(), inst.coeffs, inst.lam)
    top = b.tilde_A.top + 1
    via_ideal = blowup_ideal(inst.A.ideal, inst.tau, f)
    via_dual = bumd_status(inst.F, inst.G, inst.tau, f, inst.lam)
    A = inst.A
    assert all(A.is_zero(c) for c in xi_coefficients(b.f - f, inst.R).values())
    assert ideal_equal(b.tilde_A.ideal, via_ideal.ideal, upto=top)
    assert via_dual.valid
    assert ideal_equal(b.tilde_A.ideal, via_dual.dual.A_md.ideal, upto=top)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_g_dual_polynomial_by_contraction(seed):
    inst = gen.instance(random.Random(seed))
    f = inst.f()
    h = g_dual_polynomial(f, inst.G)
    k = inst.G.homogeneous_degree()
    xi = inst.R1.var(inst.R1.nvars - 1)
    assert h.homogeneous_degree() == k
    assert split_monic(h, inst.R, k) is not None
    residue = f * h - xi ** (inst.n + k)
    for c in xi_coefficients(residue, inst.R).values():
        assert c.contract(inst.G).is_zero()


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_gorenstein_iff_constant_term_is_nonzero_multiple_of_tau(seed):
    rng = random.Random(seed)
    inst = gen.instance(rng)
    pi = inst.pi()
    A, n = inst.A, inst.n
    good = gorenstein_criterion(pi, inst.f())
    assert good.gorenstein and good.lam == inst.lam
    other = gen.nonzero_form(inst.R, n, rng)
    crit = gorenstein_criterion(pi, inst.f(constant=other))
    pair = [A.coords(other, n), A.coords(inst.tau, n)]
    in_span = rank(pair, A.field) == rank(pair[1:], A.field)
    nonzero = not A.is_zero(other)
    assert crit.beta_injective == in_span
    assert crit.gorenstein == (in_span and (nonzero or n == 1))
    # with a_n = 0 the hat is A itself when n = 1 and has a second socle degree otherwise
    zero = gorenstein_criterion(pi, inst.f(constant=inst.R.zero()))
    assert zero.gorenstein == (n == 1)


def test_hat_with_zero_constant_has_two_socle_degrees():
    R = Ring.make(["x", "y"])
    Q = R.mirror()
    A = algebra_from_dual(Q.parse("X^2*Y^2"))
    T = algebra_from_dual(Q.parse("X*Y"))
    R1 = xi_ring(R)
    hat = construct_hat(natural_projection(A, T), R1.parse("xi^2"))
    assert hat.algebra.socle_dims() == {3: 1, 4: 1}


def test_blowup_argument_errors():
    R = Ring.make(["x", "y"])
    Q = R.mirror()
    A = algebra_from_dual(Q.parse("X^2*Y^2"))
    T = algebra_from_dual(Q.parse("X*Y"))
    pi = natural_projection(A, T)
    with pytest.raises(ValueError):
        cohomological_blowup(pi, [R.zero()], 0)
    with pytest.raises(WrongDegree):
        cohomological_blowup(pi, [], 1)
    R1 = xi_ring(R)
    with pytest.raises(ThomMismatch):
        bumd_status(Q.parse("X^2*Y^2"), Q.parse("X^2"), R.parse("x*y"), R1.parse("xi^2"), 1)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_fiber_at_one_is_the_blowup(seed):
    inst = gen.instance(random.Random(seed))
    pi = inst.pi()
    b = cohomological_blowup(pi, inst.coeffs, inst.lam)
    one = family_fiber(pi, inst.coeffs, inst.lam, 1)
    assert ideal_equal(one.algebra.ideal, b.tilde_A.ideal, upto=b.tilde_A.top + 1)


def test_annihilator_of_lifted_dual_form():
    R = Ring.make(["x", "y"])
    R1 = xi_ring(R)
    I = annihilator(R1.mirror().parse("X^2*Y^2 + X*Y*Xi^2 + Xi^4"))
    assert ArtinianAlgebra(I).hilbert == (1, 3, 5, 3, 1)
