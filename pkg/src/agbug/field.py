"""Exact coefficient fields: the rationals and prime fields.

Rational elements are :class:`fractions.Fraction`.  Prime field elements are
:class:`Mod`, a small value type supporting the same operators, so every
algorithm in the package is written once against ``+ - * /`` and ``== 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NotPrime, ZeroInverse


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * _inv_int(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * _inv_int(o, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Mod(o * _inv_int(self.v, self.p), self.p)

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Mod(pow(_inv_int(self.v, self.p), -e, self.p), self.p)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


def _inv_int(a: int, p: int) -> int:
    if a % p == 0:
        raise ZeroInverse(f"0 has no inverse modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class Field:
    """A coefficient field; ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value):
        """Coerce an int, Fraction, string or element into this field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p == 0:
            if isinstance(value, Mod):
                raise TypeError("cannot coerce a residue class into QQ")
            return Fraction(value)
        if isinstance(value, Mod):
            if value.p != self.p:
                raise TypeError(f"residue modulo {value.p} is not in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Mod(value.numerator * _inv_int(value.denominator, self.p), self.p)
        return Mod(int(value), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def inverse(self, a):
        if a == 0:
            raise ZeroInverse("0 has no inverse")
        return self.one / a

    def elements(self):
        """All elements of a prime field, in order 0..p-1."""
        if self.p == 0:
            raise ValueError("QQ is infinite")
        return [Mod(v, self.p) for v in range(self.p)]

    def __str__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    """Read ``QQ`` or ``GF(p)``."""
    t = text.strip()
    if t in ("QQ", "Q"):
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unknown field {text!r}")


def field_inverse(field: Field, a):
    return field.inverse(field(a))
