"""Cohomology rings of smooth complete toric varieties from their fans.

``H*(X) = Q[x_1..x_r] / (SR + J)`` where ``SR`` is generated by the
squarefree monomials of minimal non-faces and ``J`` by the linear forms
``sum_i <m, u_i> x_i`` for ``m`` running over a basis of the dual lattice.
The reduced presentation solves ``J`` for the last possible variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from math import gcd
from typing import Sequence

from .algebra import ArtinianAlgebra
from .errors import InvalidFan
from .field import QQ, Field
from .ideal import GradedIdeal
from .linalg import rank, rref
from .poly import Polynomial, Ring


def _half(v):
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v):
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def validate_fan_2d(rays: Sequence[tuple], cones: Sequence[Sequence[int]]) -> None:
    """Complete simplicial 2D fan: cones are the angularly adjacent ray pairs."""
    if len(rays) < 3:
        raise InvalidFan("a complete 2D fan needs at least three rays")
    for u in rays:
        if len(u) != 2 or u == (0, 0) or gcd(*u) != 1:
            raise InvalidFan(f"ray {u} is not a primitive vector in Z^2")
    order = sorted(range(len(rays)), key=cmp_to_key(lambda a, b: _angle_cmp(rays[a], rays[b])))
    for a, b in zip(order, order[1:]):
        if _angle_cmp(rays[a], rays[b]) == 0:
            raise InvalidFan("two rays point in the same direction")
    adjacent = set()
    for k in range(len(order)):
        a, b = order[k], order[(k + 1) % len(order)]
        u, v = rays[a], rays[b]
        if u[0] * v[1] - u[1] * v[0] <= 0:
            raise InvalidFan(f"rays {u} and {v} leave a gap of angle at least pi")
        adjacent.add(frozenset((a, b)))
    given = {frozenset(c) for c in cones}
    if any(len(c) != 2 for c in cones) or given != adjacent:
        raise InvalidFan("cones must be exactly the pairs of angularly adjacent rays")


def minimal_nonfaces(nrays: int, cones: Sequence[Sequence[int]], dim: int) -> list[tuple]:
    cone_sets = [frozenset(c) for c in cones]

    def is_face(s):
        return any(s <= c for c in cone_sets)
    out = []
    for size in range(1, dim + 2):
        for s in combinations(range(nrays), size):
            fs = frozenset(s)
            if not is_face(fs) and all(is_face(fs - {i}) for i in s):
                out.append(s)
    return out


@dataclass
class ToricPresentation:
    ring: Ring
    stanley_reisner: list
    linear: list
    algebra: ArtinianAlgebra
    reduced_ring: Ring
    reduced_ideal: GradedIdeal
    reduced_algebra: ArtinianAlgebra
    substitution: dict
    validated: bool

    @property
    def hilbert(self) -> tuple:
        return self.algebra.hilbert


def toric_presentation(rays: Sequence[Sequence[int]], cones: Sequence[Sequence[int]],
                       field: Field = QQ, names: Sequence[str] | None = None) -> ToricPresentation:
    rays = [tuple(int(c) for c in u) for u in rays]
    if not rays:
        raise InvalidFan("no rays")
    dim = len(rays[0])
    if any(len(u) != dim for u in rays):
        raise InvalidFan("rays of different dimensions")
    cones = [tuple(c) for c in cones]
    if any(i < 0 or i >= len(rays) for c in cones for i in c):
        raise InvalidFan("cone refers to a missing ray")
    validated = dim == 2
    if validated:
        validate_fan_2d(rays, cones)
    for c in cones:
        if len(c) != dim or rank([list(rays[i]) for i in c], field) != dim:
            raise InvalidFan(f"cone {c} is not simplicial of full dimension")
    r = len(rays)
    names = list(names) if names else [f"x{i + 1}" for i in range(r)]
    R = Ring.make(names, field=field)
    sr = []
    for s in minimal_nonfaces(r, cones, dim):
        e = [0] * r
        for i in s:
            e[i] = 1
        sr.append(R.monomial(tuple(e)))
    lin = []
    for j in range(dim):
        lin.append(Polynomial(R, {tuple(1 if k == i else 0 for k in range(r)): field(rays[i][j])
                                  for i in range(r) if rays[i][j] != 0}))
    A = ArtinianAlgebra(GradedIdeal(R, sr + lin))

    # eliminate variables from the right: pivot columns of the reversed matrix
    L = [[field(rays[i][j]) for i in reversed(range(r))] for j in range(dim)]
    E, piv = rref(L, field)
    elim = [r - 1 - c for c in piv]
    keep = [i for i in range(r) if i not in elim]
    R2 = Ring.make([names[i] for i in keep], field=field)
    images = {}
    for i, name in zip(keep, R2.names):
        images[i] = R2.var(name)
    for row, c in zip(E, piv):
        var = r - 1 - c
        expr = R2.zero()
        for k in keep:
            coef = row[r - 1 - k]
            if coef != 0:
                expr = expr - R2.var(names[k]).scale(coef)
        images[var] = expr
    sub = [images[i] for i in range(r)]
    red = GradedIdeal(R2, [g.compose(sub) for g in sr])
    Ared = ArtinianAlgebra(red)
    return ToricPresentation(R, sr, lin, A, R2, red, Ared, {names[i]: images[i] for i in elim}, validated)
