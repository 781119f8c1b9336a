"""Homogeneous ideals, computed one degree at a time by linear algebra.

For each degree ``d`` an ideal stores the reduced row echelon form of the
vector space ``I_d`` inside ``R_d`` (a :class:`Piece`).  Pivots are leading
monomials, so the remaining monomials are the standard monomials of the
quotient and reduction by the piece is the normal form.  No Groebner basis is
ever formed: the pieces come either from spanning sets
``x_j * I_(d - w_j) + (generators of degree d)`` or from a kernel description
(annihilators, colons, intersections, kernels of maps).
"""
from __future__ import annotations

from typing import Callable, Iterable

from .errors import NotHomogeneous, RingMismatch
from .linalg import Echelon, axpy
from .poly import Polynomial, Ring


def shift(v: dict, j: int, k: int = 1) -> dict:
    out = {}
    for m, c in v.items():
        e = list(m)
        e[j] += k
        out[tuple(e)] = c
    return out


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Piece:
    """Degree ``d`` part of an ideal in reduced echelon form."""

    __slots__ = ("ring", "degree", "rows", "std", "_stdset")

    def __init__(self, ring: Ring, degree: int, rows: dict):
        self.ring = ring
        self.degree = degree
        self.rows = rows
        self.std = tuple(m for m in ring.monomials(degree) if m not in rows)
        self._stdset = None

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return len(self.std)

    @property
    def full(self) -> bool:
        return not self.std

    def reduce(self, v: dict) -> dict:
        """Normal form of a degree-``d`` vector: only standard monomials remain."""
        v = dict(v)
        for m in [m for m in v if m in self.rows]:
            c = v.get(m)
            if c is not None:
                axpy(v, -c, self.rows[m])
        return v

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[Polynomial]:
        return [Polynomial(self.ring, self.rows[m])
                for m in sorted(self.rows, key=self.ring.key, reverse=True)]

    def __eq__(self, other):
        return isinstance(other, Piece) and self.degree == other.degree and self.rows == other.rows


def full_piece(ring: Ring, d: int) -> Piece:
    one = ring.field.one
    return Piece(ring, d, {m: {m: one} for m in ring.monomials(d)})


def echelon_piece(ring: Ring, d: int, vectors: Iterable[dict]) -> Piece:
    E = Echelon(ring.key)
    for v in vectors:
        if v:
            E.add(v)
    return Piece(ring, d, E.rows)


def kernel_piece(ring: Ring, d: int, image: Callable[[tuple], dict]) -> Piece:
    """Kernel of a linear map ``R_d -> V`` given on monomials.

    Monomials are fed smallest first; each dependency found is a kernel
    element whose leading monomial is the one just fed, with a tail of
    smaller standard monomials, which is exactly a reduced echelon row.
    """
    E = Echelon(lambda c: c, track=True)
    one = ring.field.one
    rows = {}
    for m in reversed(ring.monomials(d)):
        pivot, relation = E.add_tracked(image(m), {m: one})
        if pivot is None:
            rows[m] = relation
    return Piece(ring, d, rows)


class GradedIdeal:
    """A homogeneous ideal of a primal ring.

    Build it from homogeneous generators, or (internally) from a function
    producing the degree pieces together with a degree from which the ideal
    is known to contain everything.
    """

    def __init__(self, ring: Ring, gens: Iterable[Polynomial] = (), *,
                 piece_fn: Callable[[int], Piece] | None = None,
                 full_from: int | None = None, label: str = ""):
        if ring.dual:
            raise RingMismatch("ideals live in the primal ring")
        self.ring = ring
        self.label = label
        self._pieces: dict[int, Piece] = {}
        self._mpiece: dict[int, Piece] = {}
        self._piece_fn = piece_fn
        self._full_from = full_from
        self._mingens = None
        self._gens = None
        if piece_fn is None:
            gl = []
            for g in gens:
                if g.ring != ring:
                    raise RingMismatch(f"generator {g} not in {ring}")
                if len(g.degrees()) > 1:
                    raise NotHomogeneous(f"generator {g} is not homogeneous")
                if not g.is_zero():
                    gl.append(g)
            self._gens = gl
            self._by_degree: dict[int, list] = {}
            for g in gl:
                self._by_degree.setdefault(g.homogeneous_degree(), []).append(g.terms)

    # degree pieces -----------------------------------------------------
    def piece(self, d: int) -> Piece:
        if d < 0:
            return Piece(self.ring, d, {})
        p = self._pieces.get(d)
        if p is not None:
            return p
        if self._full_from is not None and d >= self._full_from:
            p = full_piece(self.ring, d)
        elif self._piece_fn is not None:
            p = self._piece_fn(d)
        else:
            p = self._span_piece(d)
        self._pieces[d] = p
        return p

    def _span_piece(self, d: int) -> Piece:
        ring = self.ring
        lower = [(j, self.piece(d - w)) for j, w in enumerate(ring.weights) if d - w >= 0]
        if d > 0 and lower and all(pc.full for _, pc in lower):
            # every degree-d monomial is x_j times something already full
            full = full_piece(ring, d)
            self._mpiece[d] = full
            return full
        E = Echelon(ring.key)
        for j, pc in lower:
            for row in pc.rows.values():
                E.add(shift(row, j))
        self._mpiece[d] = Piece(ring, d, {k: dict(v) for k, v in E.rows.items()})
        for g in self._by_degree.get(d, ()):
            E.add(g)
        return Piece(ring, d, E.rows)

    def m_piece(self, d: int) -> Piece:
        """``(m I)_d`` in reduced echelon form, ``m`` the irrelevant ideal."""
        p = self._mpiece.get(d)
        if p is not None:
            return p
        ring = self.ring
        lower = [(j, self.piece(d - w)) for j, w in enumerate(ring.weights) if d - w >= 0]
        if d > 0 and lower and all(pc.full for _, pc in lower):
            p = full_piece(ring, d)
        else:
            p = echelon_piece(ring, d, [shift(row, j) for j, pc in lower
                                        for row in pc.rows.values()])
        self._mpiece[d] = p
        return p

    def m_leading(self, d: int) -> set:
        return set(self.m_piece(d).rows)

    def mingen_coords(self, v: dict, d: int) -> dict:
        """Coordinates of ``v`` in ``I_d`` modulo ``(m I)_d``, keyed by generator pivot."""
        r = self.m_piece(d).reduce(v)
        pc = self.piece(d)
        return {m: c for m, c in r.items() if m in pc.rows}

    def full_from(self, bound: int | None = None) -> int | None:
        """Least ``D`` with ``I_e = R_e`` for all ``e >= D``; ``None`` if not found."""
        if self._full_from is not None:
            return self._full_from
        ring = self.ring
        wmax = max(ring.weights, default=1)
        if bound is None:
            bound = self.degree_bound()
        run = 0
        d = 0
        while d <= bound + wmax:
            if self.piece(d).full:
                run += 1
                if run >= wmax:
                    self._full_from = d - wmax + 1
                    return self._full_from
            else:
                run = 0
            d += 1
        return None

    def degree_bound(self) -> int:
        """Degree past which an Artinian ideal of this shape must be full."""
        if self._gens is None:
            return 0 if self._full_from is None else self._full_from
        degs = [g.homogeneous_degree() for g in self._gens]
        if not degs:
            return 0
        bound = sum(degs)
        if self.ring.standard:
            bound = min(bound, self.ring.nvars * (max(degs) - 1) + 1)
        return bound

    # membership and reduction -----------------------------------------
    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatch(f"{p} not in {self.ring}")
        out: dict = {}
        for d, part in p.graded_pieces().items():
            out.update(self.piece(d).reduce(part.terms))
        return Polynomial(self.ring, out)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def __contains__(self, p):
        return self.contains(p)

    def dim(self, d: int) -> int:
        return self.piece(d).dim

    # generators --------------------------------------------------------
    @property
    def gens(self) -> list[Polynomial]:
        """Generators as given, or minimal generators for derived ideals."""
        if self._gens is not None:
            return list(self._gens)
        return self.minimal_generators()

    def _gen_degree_range(self) -> range:
        wmax = max(self.ring.weights, default=1)
        if self._gens is not None:
            top = max((g.homogeneous_degree() for g in self._gens), default=-1)
            return range(0, top + 1)
        ff = self.full_from()
        if ff is None:
            raise ValueError("ideal with unknown generator degrees")
        return range(0, ff + wmax)

    def minimal_generators(self) -> list[Polynomial]:
        """Echelon representatives of ``I / mI`` in every degree, largest pivot first."""
        if self._mingens is not None:
            return list(self._mingens)
        out = []
        for d in self._gen_degree_range():
            pc = self.piece(d)
            if not pc.rows:
                continue
            ml = self.m_leading(d) if d > 0 else set()
            for m in sorted(pc.rows, key=self.ring.key, reverse=True):
                if m not in ml:
                    out.append(Polynomial(self.ring, pc.rows[m]))
        self._mingens = out
        return list(out)

    def mu(self) -> int:
        return len(self.minimal_generators())

    def generator_degrees(self) -> list[int]:
        return [g.homogeneous_degree() for g in self.minimal_generators()]

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"GradedIdeal({str(self)})"


def _common_full(*ideals) -> int | None:
    ffs = [I.full_from() for I in ideals]
    if any(f is None for f in ffs):
        return None
    return max(ffs)


def ideal_equal(I: GradedIdeal, J: GradedIdeal, upto: int | None = None) -> bool:
    if I.ring != J.ring:
        return False
    if upto is None:
        upto = _common_full(I, J)
        if upto is None:
            raise ValueError("cannot compare non-Artinian ideals without a degree bound")
    return all(I.piece(d).rows == J.piece(d).rows for d in range(upto + 1))


def first_difference(I: GradedIdeal, J: GradedIdeal, upto: int | None = None) -> int | None:
    if upto is None:
        upto = _common_full(I, J)
    for d in range(upto + 1):
        if I.piece(d).rows != J.piece(d).rows:
            return d
    return None


def ideal_sum(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    if I.ring != J.ring:
        raise RingMismatch("sum of ideals in different rings")
    if I._gens is not None and J._gens is not None:
        return GradedIdeal(I.ring, I._gens + J._gens)
    ffs = [f for f in (I.full_from(), J.full_from()) if f is not None]
    ring = I.ring
    return GradedIdeal(ring, piece_fn=lambda d: echelon_piece(
        ring, d, [*I.piece(d).rows.values(), *J.piece(d).rows.values()]),
        full_from=min(ffs) if ffs else None)


def ideal_product(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    if I.ring != J.ring:
        raise RingMismatch("product of ideals in different rings")
    return GradedIdeal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_intersection(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    if I.ring != J.ring:
        raise RingMismatch("intersection of ideals in different rings")
    ring = I.ring

    def piece(d):
        pi, pj = I.piece(d), J.piece(d)

        def image(m):
            v = {(0, k): c for k, c in pi.reduce({m: ring.field.one}).items()}
            v.update({(1, k): c for k, c in pj.reduce({m: ring.field.one}).items()})
            return v
        return kernel_piece(ring, d, image)
    return GradedIdeal(ring, piece_fn=piece, full_from=_common_full(I, J))


def ideal_combine(I: GradedIdeal, J: GradedIdeal, op: str) -> GradedIdeal:
    return {"sum": ideal_sum, "product": ideal_product,
            "intersection": ideal_intersection}[op](I, J)


def colon(I: GradedIdeal, tau: Polynomial) -> GradedIdeal:
    """``(I : tau)`` for a homogeneous ``tau``, degree by degree."""
    ring = I.ring
    if tau.ring != ring:
        raise RingMismatch(f"{tau} not in {ring}")
    e = tau.homogeneous_degree()
    if e is None:
        return GradedIdeal(ring, piece_fn=lambda d: full_piece(ring, d), full_from=0)
    ff = I.full_from()

    def piece(d):
        target = I.piece(d + e)
        return kernel_piece(ring, d, lambda m: target.reduce(
            {mono_mul(m, k): c for k, c in tau.terms.items()}))
    return GradedIdeal(ring, piece_fn=piece, full_from=None if ff is None else max(ff - e, 0))


def extend_ideal(I: GradedIdeal, ring: Ring) -> list[Polynomial]:
    """Generators of ``I`` pushed into a ring with extra variables."""
    return [g.embed(ring) for g in I.gens]


def membership(I: GradedIdeal, p: Polynomial) -> bool:
    return I.contains(p)
