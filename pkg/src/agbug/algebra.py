"""Graded Artinian quotients, orientations, maps and Thom classes.

An :class:`ArtinianAlgebra` is ``R / I`` with its Hilbert function and
degreewise normal forms.  An :class:`OrientedAlgebra` is an Artinian
Gorenstein algebra with a chosen socle generator ``a_soc`` and the matching
dual generator ``F`` (so that ``(a_soc o F)(0) = 1``); integration is
``a -> (a o F)(0)``.

A map between algebras is given by the images of the source variables.  The
Thom class of ``pi: A -> T`` is the unique ``tau`` in ``A_(d-k)`` with
``integral_T pi(a) = integral_A tau * a`` for all ``a``.
"""
from __future__ import annotations

from typing import Sequence

from .errors import (IllDefined, InvariantViolation, NotArtinian, NotGorenstein,
                     NotHomogeneous, OrientationMissing, RingMismatch, WrongDegree,
                     ZeroForm)
from .ideal import GradedIdeal, Piece, kernel_piece, mono_mul
from .linalg import kernel, rank, solve
from .poly import Polynomial, Ring


def annihilator(F: Polynomial) -> GradedIdeal:
    """``Ann(F)`` for a homogeneous dual form, as a kernel of contraction."""
    if not F.ring.dual:
        raise RingMismatch("annihilator needs a form in a dual ring")
    if F.is_zero():
        raise ZeroForm("Ann(0) is the whole ring")
    d = F.homogeneous_degree()
    ring = F.ring.primal()
    terms = F.terms

    def image(m):
        out = {}
        for b, c in terms.items():
            if all(bi >= ai for ai, bi in zip(m, b)):
                out[tuple(bi - ai for ai, bi in zip(m, b))] = c
        return out

    return GradedIdeal(ring, piece_fn=lambda k: kernel_piece(ring, k, image),
                       full_from=d + 1, label=f"Ann({F})")


class ArtinianAlgebra:
    """The graded Artinian quotient ``R / I``."""

    def __init__(self, ideal: GradedIdeal, bound: int | None = None):
        self.ring = ideal.ring
        self.ideal = ideal
        ff = ideal.full_from(bound)
        if ff is None:
            raise NotArtinian(f"{ideal} does not contain a power of the maximal ideal "
                              f"within the degree bound")
        hil = [ideal.piece(d).codim for d in range(ff)]
        while hil and hil[-1] == 0:
            hil.pop()
        if not hil:
            raise NotArtinian("the ideal is the whole ring")
        self.hilbert = tuple(hil)
        self.top = len(hil) - 1
        self._socle = None

    @property
    def field(self):
        return self.ring.field

    @property
    def dim(self) -> int:
        return sum(self.hilbert)

    def H(self, d: int) -> int:
        return self.hilbert[d] if 0 <= d < len(self.hilbert) else 0

    def std(self, d: int) -> tuple:
        if d < 0 or d > self.top:
            return ()
        return self.ideal.piece(d).std

    def piece(self, d: int) -> Piece:
        return self.ideal.piece(d)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatch(f"{p} is not in {self.ring}")
        return self.ideal.reduce(p)

    def nf_vec(self, v: dict, d: int) -> dict:
        if d > self.top:
            return {}
        return self.ideal.piece(d).reduce(v)

    def element(self, text: str) -> Polynomial:
        return self.normal_form(self.ring.parse(text))

    def is_zero(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return self.normal_form(a * b)

    def coords(self, p: Polynomial, d: int) -> list:
        nf = self.nf_vec(p.part(d).terms, d)
        z = self.field.zero
        return [nf.get(m, z) for m in self.std(d)]

    def vec_coords(self, v: dict, d: int) -> list:
        nf = self.nf_vec(v, d)
        z = self.field.zero
        return [nf.get(m, z) for m in self.std(d)]

    def from_coords(self, vec: Sequence, d: int) -> Polynomial:
        return Polynomial(self.ring, dict(zip(self.std(d), vec)))

    def basis(self, d: int) -> list[Polynomial]:
        return [self.ring.monomial(m) for m in self.std(d)]

    # socle ---------------------------------------------------------------
    def socle(self) -> dict:
        """Basis of the socle ``(0 : m)`` in each degree that has one."""
        if self._socle is not None:
            return self._socle
        out = {}
        ring = self.ring
        for d in range(self.top + 1):
            std = self.std(d)
            if not std:
                continue
            rows = []
            for j, w in enumerate(ring.weights):
                tgt = self.std(d + w)
                if not tgt:
                    continue
                cols = []
                for m in std:
                    e = list(m)
                    e[j] += 1
                    nf = self.nf_vec({tuple(e): self.field.one}, d + w)
                    cols.append([nf.get(t, self.field.zero) for t in tgt])
                rows.extend([list(r) for r in zip(*cols)])
            ker = kernel(rows, self.field, ncols=len(std)) if rows else \
                kernel([], self.field, ncols=len(std))
            if ker:
                out[d] = [self.from_coords(v, d) for v in ker]
        self._socle = out
        return out

    def socle_dims(self) -> dict:
        return {d: len(v) for d, v in self.socle().items()}

    def is_gorenstein(self) -> bool:
        s = self.socle()
        return sum(len(v) for v in s.values()) == 1

    def __str__(self):
        return f"{self.ring}/{self.ideal}"


class OrientedAlgebra(ArtinianAlgebra):
    """An Artinian Gorenstein algebra with socle generator and dual generator."""

    soc: Polynomial
    dual: Polynomial

    @classmethod
    def _wrap(cls, A: ArtinianAlgebra, soc: Polynomial, F: Polynomial) -> "OrientedAlgebra":
        B = cls.__new__(cls)
        B.__dict__.update(A.__dict__)
        B.soc = soc
        B.dual = F
        return B

    @property
    def d(self) -> int:
        return self.top

    def integrate(self, p: Polynomial) -> object:
        """``(p o F)(0)``: only the top degree part of ``p`` contributes."""
        z = self.field.zero
        total = z
        for m, c in p.part(self.top).terms.items():
            f = self.dual.terms.get(m)
            if f is not None:
                total = total + c * f
        return total


def quotient(I: GradedIdeal) -> ArtinianAlgebra:
    return ArtinianAlgebra(I)


def algebra_from_dual(F: Polynomial) -> OrientedAlgebra:
    """``R / Ann(F)`` oriented by ``F``."""
    A = ArtinianAlgebra(annihilator(F))
    return OrientedAlgebra._wrap(A, _soc_from_dual(A, F), F)


def _soc_from_dual(A: ArtinianAlgebra, F: Polynomial) -> Polynomial:
    (s,) = A.std(A.top)
    c = F.terms.get(s)
    if c is None or c == 0:
        raise InvariantViolation("standard socle monomial pairs to zero with F")
    return A.ring.monomial(s, A.field.one / c)


def _dual_from_soc(A: ArtinianAlgebra, soc: Polynomial) -> Polynomial:
    d = A.top
    (s,) = A.std(d)
    cs = A.coords(soc, d)[0]
    if cs == 0:
        raise ValueError(f"{soc} is zero in the top degree")
    terms = {}
    for m in A.ring.monomials(d):
        nf = A.nf_vec({m: A.field.one}, d)
        c = nf.get(s)
        if c is not None:
            terms[m] = c / cs
    return Polynomial(A.ring.mirror(), terms)


def dual_generator(A) -> Polynomial:
    """Dual generator of a Gorenstein quotient, leading coefficient 1."""
    if isinstance(A, GradedIdeal):
        A = ArtinianAlgebra(A)
    if not A.is_gorenstein():
        raise NotGorenstein(f"socle dimensions {A.socle_dims()}")
    F = _dual_from_soc(A, A.ring.monomial(A.std(A.top)[0])).monic()
    return F


def same_ideal(I: GradedIdeal, J: GradedIdeal, upto: int) -> bool:
    return all(I.piece(k).rows == J.piece(k).rows for k in range(upto + 1))


def orient(A: ArtinianAlgebra, *, dual: Polynomial | None = None,
           socle: Polynomial | None = None) -> OrientedAlgebra:
    """Choose an orientation from a dual generator or from a socle element."""
    if (dual is None) == (socle is None):
        raise ValueError("give exactly one of dual= or socle=")
    if not A.is_gorenstein():
        raise NotGorenstein(f"socle dimensions {A.socle_dims()}")
    if dual is not None:
        if dual.ring != A.ring.mirror():
            raise RingMismatch("dual generator must live in the dual ring")
        if dual.homogeneous_degree() != A.top:
            raise WrongDegree(f"dual generator has degree {dual.degree()}, socle degree {A.top}")
        if not same_ideal(annihilator(dual), A.ideal, A.top + 1):
            raise NotGorenstein(f"Ann({dual}) differs from the presenting ideal")
        return OrientedAlgebra._wrap(A, _soc_from_dual(A, dual), dual)
    if socle.ring != A.ring:
        raise RingMismatch("socle element must live in the algebra's ring")
    soc = A.normal_form(socle)
    if soc.is_zero() or soc.degrees() != {A.top}:
        raise ValueError(f"{socle} is not a nonzero top degree element")
    F = _dual_from_soc(A, soc)
    B = OrientedAlgebra._wrap(A, soc, F)
    if B.integrate(soc) != 1:
        raise InvariantViolation("orientation does not integrate to 1")
    return B


def rescale_orientation(A: OrientedAlgebra, lam) -> OrientedAlgebra:
    """Multiply integration by ``lam``: ``F -> lam F`` and ``a_soc -> a_soc / lam``.

    Thom classes of maps out of ``A`` get divided by ``lam``.
    """
    lam = A.field(lam)
    if lam == 0:
        raise ValueError("cannot rescale by zero")
    return OrientedAlgebra._wrap(A, A.soc.scale(A.field.one / lam), A.dual.scale(lam))


class AlgebraMap:
    """Graded algebra map ``A -> T`` given by images of the variables of ``A``."""

    def __init__(self, source: ArtinianAlgebra, target: ArtinianAlgebra,
                 images: Sequence[Polynomial], check: bool = True):
        if len(images) != source.ring.nvars:
            raise ValueError("one image per source variable")
        ims = []
        for w, im in zip(source.ring.weights, images):
            if not isinstance(im, Polynomial):
                im = target.ring.const(im)
            if im.ring != target.ring:
                raise RingMismatch(f"image {im} is not in {target.ring}")
            if not im.is_zero() and im.degrees() != {w}:
                raise NotHomogeneous(f"image {im} must be homogeneous of degree {w}")
            ims.append(target.normal_form(im))
        self.source = source
        self.target = target
        self.images = ims
        self._memo: dict = {}
        self._kernel = None
        if check:
            for g in source.ideal.gens:
                if not self.apply(g).is_zero():
                    raise IllDefined(f"generator {g} maps to {self.apply(g)}")

    def _mono(self, m) -> dict:
        r = self._memo.get(m)
        if r is not None:
            return r
        if not any(m):
            r = {(0,) * self.target.ring.nvars: self.target.field.one}
        else:
            j = max(i for i, e in enumerate(m) if e)
            e = list(m)
            e[j] -= 1
            prev = self._mono(tuple(e))
            im = self.images[j]
            prod = {}
            for a, c in prev.items():
                for b, x in im.terms.items():
                    k = mono_mul(a, b)
                    prod[k] = prod.get(k, 0) + c * x
            prod = {k: v for k, v in prod.items() if v != 0}
            d = self.source.ring.mdeg(m)
            r = self.target.nf_vec(prod, d)
        self._memo[m] = r
        return r

    def apply(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source.ring:
            raise RingMismatch(f"{p} is not in {self.source.ring}")
        out: dict = {}
        for m, c in p.terms.items():
            for k, x in self._mono(m).items():
                out[k] = out.get(k, 0) + c * x
        return Polynomial(self.target.ring, out)

    __call__ = apply

    def matrix(self, d: int) -> list[list]:
        """Matrix of ``A_d -> T_d`` in standard monomial bases."""
        src, tgt = self.source.std(d), self.target.std(d)
        z = self.target.field.zero
        cols = [[self._mono(m).get(t, z) for t in tgt] for m in src]
        return [list(r) for r in zip(*cols)] if cols else [[] for _ in tgt]

    def rank(self, d: int) -> int:
        M = self.matrix(d)
        if not M or not M[0]:
            return 0
        return rank(M, self.target.field)

    def is_surjective(self) -> bool:
        return all(self.rank(d) == self.target.H(d) for d in range(self.target.top + 1))

    def kernel(self) -> GradedIdeal:
        """Preimage in ``R`` of the kernel; it contains the source ideal."""
        if self._kernel is None:
            ring = self.source.ring
            self._kernel = GradedIdeal(
                ring, piece_fn=lambda d: kernel_piece(ring, d, self._mono),
                full_from=self.source.top + 1, label="ker")
        return self._kernel

    def kernel_dims(self) -> tuple:
        K = self.kernel()
        return tuple(self.source.H(d) - (K.piece(d).codim if d <= self.source.top else 0)
                     for d in range(self.source.top + 1))

    def is_injective(self) -> bool:
        return not any(self.kernel_dims())

    def is_identity_on_variables(self) -> bool:
        return self.source.ring == self.target.ring and all(
            im == self.target.normal_form(v) for im, v in zip(self.images, self.source.ring.gens()))

    def is_restriction(self) -> bool:
        return not thom_class(self).is_zero()

    def compose(self, other: "AlgebraMap") -> "AlgebraMap":
        """``other o self``."""
        return AlgebraMap(self.source, other.target, [other.apply(im) for im in self.images],
                          check=False)


def make_map(source: ArtinianAlgebra, target: ArtinianAlgebra,
             images: Sequence) -> AlgebraMap:
    ims = [target.ring.parse(i) if isinstance(i, str) else i for i in images]
    return AlgebraMap(source, target, ims)


def natural_projection(source: ArtinianAlgebra, target: ArtinianAlgebra) -> AlgebraMap:
    if source.ring != target.ring:
        raise RingMismatch("natural projection needs a common ring")
    return AlgebraMap(source, target, target.ring.gens())


def thom_class(pi: AlgebraMap) -> Polynomial:
    """Thom class of ``pi``, in normal form in degree ``d - k``."""
    A, T = pi.source, pi.target
    if not isinstance(A, OrientedAlgebra) or not isinstance(T, OrientedAlgebra):
        raise OrientationMissing("Thom classes need oriented source and target")
    d, k = A.top, T.top
    n = d - k
    if n < 0:
        raise WrongDegree(f"target socle degree {k} exceeds source socle degree {d}")
    sn, sk = A.std(n), A.std(k)
    rows, rhs = [], []
    for a in sk:
        am = A.ring.monomial(a)
        rows.append([A.integrate(A.ring.monomial(mono_mul(s, a))) for s in sn])
        rhs.append(T.integrate(pi.apply(am)))
    x = solve(rows, rhs, A.field) if rows else []
    if x is None:
        raise InvariantViolation("Poincare pairing is degenerate")
    tau = A.normal_form(A.from_coords(x, n))
    if pi.is_identity_on_variables():
        check = tau.contract(A.dual) if not tau.is_zero() else T.dual.ring.zero()
        if check != T.dual:
            raise InvariantViolation(f"tau o F = {check}, expected {T.dual}")
    return tau
