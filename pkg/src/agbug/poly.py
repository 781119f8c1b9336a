"""Sparse weighted multivariate polynomials and the contraction action.

A :class:`Ring` is either a primal polynomial ring ``R = F[x_1..x_r]`` or its
dual ``Q = F[X_1..X_r]``, on which ``R`` acts by contraction::

    x^a o X^b = X^(b - a)   if b >= a componentwise, else 0

with no factorials, so the action is characteristic free.  Dual names mirror
primal names by capitalising the first letter (``xi`` <-> ``Xi``).

Products on the dual side are only the plain monomial products of forms in
disjoint sets of variables; anything else raises :class:`DualProductOverlap`.

Monomials are exponent tuples.  They are ordered by weighted degree, then by
reverse lexicographic order on the declared variable order (so with
``x, y, z`` we get ``x > y > z`` and ``y^2 > x*z``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DualProductOverlap, DuplicateVariable, NotHomogeneous, RingMismatch
from .field import QQ, Field

Monomial = tuple


def mirror_name(name: str, to_dual: bool) -> str:
    return (name[0].upper() if to_dual else name[0].lower()) + name[1:]


@lru_cache(maxsize=None)
def _monomials(weights: tuple, d: int) -> tuple:
    """All exponent vectors of weighted degree ``d``, largest first."""
    out = []

    def rec(i, left, acc):
        if i == len(weights) - 1:
            if left % weights[i] == 0:
                out.append(tuple(acc + [left // weights[i]]))
            return
        w = weights[i]
        for e in range(left // w, -1, -1):
            rec(i + 1, left - e * w, acc + [e])

    if d < 0:
        return ()
    if not weights:
        return ((),) if d == 0 else ()
    rec(0, d, [])
    out.sort(key=lambda m: _order_key(weights, m), reverse=True)
    return tuple(out)


def _order_key(weights, m):
    return (sum(w * e for w, e in zip(weights, m)), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class Ring:
    """A graded polynomial ring (primal) or its contraction dual."""

    field: Field
    names: tuple
    weights: tuple
    dual: bool = False

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise DuplicateVariable(f"repeated variable in {self.names}")
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable")
        if any(int(w) != w or w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    @classmethod
    def make(cls, names: Iterable[str], weights: Sequence[int] | None = None,
             field: Field = QQ) -> "Ring":
        names = tuple(names)
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        return cls(field, names, weights, False)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def standard(self) -> bool:
        return all(w == 1 for w in self.weights)

    def mirror(self) -> "Ring":
        return Ring(self.field, tuple(mirror_name(n, not self.dual) for n in self.names),
                    self.weights, not self.dual)

    def primal(self) -> "Ring":
        return self.mirror() if self.dual else self

    def adjoin(self, name: str, weight: int = 1) -> "Ring":
        if self.dual:
            raise RingMismatch("adjoin variables to the primal ring")
        if name in self.names:
            raise DuplicateVariable(f"{name} already in ring")
        return Ring(self.field, self.names + (name,), self.weights + (weight,), False)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def monomials(self, d: int) -> tuple:
        return _monomials(self.weights, d)

    def dim(self, d: int) -> int:
        return len(self.monomials(d))

    def mdeg(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def key(self, m: Monomial):
        return _order_key(self.weights, m)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m: Monomial, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(m): self.field(c)})

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_poly
        return parse_poly(text, self)

    def __str__(self):
        ws = "" if self.standard else "; weights " + ",".join(map(str, self.weights))
        return f"{self.field}[{', '.join(self.names)}{ws}]"


def adjoin_variable(ring: Ring, name: str, weight: int = 1) -> Ring:
    return ring.adjoin(name, weight)


class Polynomial:
    """Immutable sparse polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    @classmethod
    def _raw(cls, ring, terms):
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            v = c if v is None else v + c
            if v == 0:
                t.pop(m, None)
            else:
                t[m] = v
        return Polynomial._raw(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if self.ring.dual:
            s, o = self.support(), other.support()
            if s & o:
                names = ", ".join(self.ring.names[i] for i in sorted(s & o))
                raise DualProductOverlap(f"dual forms share {names}")
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = t.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                t[m] = v
        return Polynomial(self.ring, t)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        if self.ring.dual and e > 1 and not self.is_constant():
            if len(self.terms) != 1:
                raise DualProductOverlap("powers of dual forms are not plain products")
            (m, c), = self.terms.items()
            return Polynomial._raw(self.ring, {tuple(k * e for k in m): c ** e})
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return False

    def __hash__(self):
        return hash((self.ring, frozenset((m, hash(c)) for m, c in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def support(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def degrees(self) -> set:
        return {self.ring.mdeg(m) for m in self.terms}

    def degree(self) -> int:
        """Weighted degree of the top homogeneous part (``-1`` for zero)."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_degree(self) -> int | None:
        """Degree of a nonzero homogeneous polynomial; ``None`` for zero."""
        ds = self.degrees()
        if len(ds) > 1:
            raise NotHomogeneous(f"{self} is not homogeneous")
        return next(iter(ds), None)

    def graded_pieces(self) -> dict:
        out: dict = {}
        for m, c in self.terms.items():
            out.setdefault(self.ring.mdeg(m), {})[m] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in sorted(out.items())}

    def part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: c for m, c in self.terms.items()
                                           if self.ring.mdeg(m) == d})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def leading_monomial(self):
        return max(self.terms, key=self.ring.key) if self.terms else None

    def leading_coefficient(self):
        m = self.leading_monomial()
        return self.terms[m] if m is not None else self.ring.field.zero

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.one / self.leading_coefficient())

    def coefficient(self, m) -> object:
        return self.terms.get(tuple(m), self.ring.field.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def mirror(self) -> "Polynomial":
        """The same coefficients viewed in the other side of the duality."""
        return Polynomial._raw(self.ring.mirror(), dict(self.terms))

    def contract(self, F: "Polynomial") -> "Polynomial":
        """``self o F`` for ``self`` primal and ``F`` in the dual ring."""
        if self.ring.dual or not F.ring.dual or F.ring != self.ring.mirror():
            raise RingMismatch("contract needs a primal operator and a form in its dual ring")
        t: dict = {}
        for a, c in self.terms.items():
            for b, e in F.terms.items():
                if all(bi >= ai for ai, bi in zip(a, b)):
                    m = tuple(bi - ai for ai, bi in zip(a, b))
                    v = t.get(m)
                    t[m] = c * e if v is None else v + c * e
        return Polynomial(F.ring, t)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable")
        target = images[0].ring if images else self.ring
        out = target.zero()
        cache: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    term = term * cache[key]
            out = out + term
        return out

    def embed(self, ring: Ring) -> "Polynomial":
        """Move into a ring whose variables extend ours (matched by name)."""
        idx = [ring.index(n) for n in self.ring.names]
        t = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for j, k in zip(idx, m):
                e[j] = k
            t[tuple(e)] = c
        return Polynomial._raw(ring, t)

    def restrict(self, ring: Ring) -> "Polynomial":
        """Move into a subring; every variable used must exist there."""
        pos = {n: i for i, n in enumerate(ring.names)}
        t = {}
        for m, c in self.terms.items():
            e = [0] * ring.nvars
            for n, k in zip(self.ring.names, m):
                if k:
                    if n not in pos:
                        raise RingMismatch(f"{n} not in {ring}")
                    e[pos[n]] = k
            t[tuple(e)] = c
        return Polynomial._raw(ring, t)

    def vector(self) -> dict:
        return dict(self.terms)

    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def contract(p: Polynomial, F: Polynomial) -> Polynomial:
    return p.contract(F)


def graded_pieces(p: Polynomial) -> dict:
    return p.graded_pieces()


def random_form(ring: Ring, d: int, rng, bound: int = 5, density: float = 1.0) -> Polynomial:
    """Random homogeneous form with integer coefficients in ``[-bound, bound]``."""
    t = {}
    for m in ring.monomials(d):
        if density < 1.0 and rng.random() > density:
            continue
        c = rng.randint(-bound, bound)
        if c:
            t[m] = ring.field(c)
    return Polynomial(ring, t)
