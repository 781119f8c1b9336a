from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from agbug.errors import InvalidFan
from agbug.fixtures import TORIC_FANS
from agbug.ideal import ideal_equal
from agbug.toric import minimal_nonfaces, toric_presentation


def blowups_of_p2(k):
    """Fan of P^2 with k successive corner blow-ups (inserting sums of adjacent rays)."""
    rays = [(1, 0), (0, 1), (-1, -1)]
    for step in range(k):
        i = step % len(rays)
        u, v = rays[i], rays[(i + 1) % len(rays)]
        rays.insert(i + 1, (u[0] + v[0], u[1] + v[1]))
    cones = [(i, (i + 1) % len(rays)) for i in range(len(rays))]
    return rays, cones


@pytest.mark.parametrize("k", range(0, 5))
def test_smooth_surfaces_have_hilbert_1_r_minus_2_1(k):
    rays, cones = blowups_of_p2(k)
    tp = toric_presentation(rays, cones)
    assert tp.validated
    assert tp.hilbert == (1, len(rays) - 2, 1)
    assert tp.algebra.is_gorenstein()
    assert tp.reduced_algebra.hilbert == tp.hilbert


def test_minimal_nonfaces_by_brute_force():
    rays, cones = TORIC_FANS["X3"]
    faces = {frozenset(s) for c in cones for k in range(len(c) + 1) for s in combinations(c, k)}
    brute = [s for k in range(1, 4) for s in combinations(range(len(rays)), k)
             if frozenset(s) not in faces and all(frozenset(t) in faces
                                                  for t in combinations(s, k - 1))]
    assert minimal_nonfaces(len(rays), cones, 2) == brute


def test_projective_three_space_is_unvalidated_but_correct():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    cones = [c for c in combinations(range(4), 3)]
    tp = toric_presentation(rays, cones)
    assert not tp.validated
    assert tp.hilbert == (1, 1, 1, 1)


def test_product_of_lines():
    rays, cones = TORIC_FANS["P1xP1"]
    tp = toric_presentation(rays, cones)
    R = tp.reduced_ring
    assert ideal_equal(tp.reduced_ideal, type(tp.reduced_ideal)(
        R, [R.parse("x1^2"), R.parse("x2^2")]))


@pytest.mark.parametrize("rays, cones", [
    ([(1, 0), (0, 1)], [(0, 1)]),
    ([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2)]),
    ([(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2), (2, 0)]),
    ([(2, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)]),
    ([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 5)]),
])
def test_invalid_fans(rays, cones):
    with pytest.raises(InvalidFan):
        toric_presentation(rays, cones)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 6))
def test_reduced_presentation_has_two_fewer_variables(k):
    rays, cones = blowups_of_p2(k)
    tp = toric_presentation(rays, cones)
    assert tp.reduced_ring.nvars == len(rays) - 2
    r = len(rays)
    # non-adjacent pairs, except for P^2 where the only non-face is the full triple
    assert len(tp.stanley_reisner) == (r * (r - 3) // 2 if r > 3 else 1)
