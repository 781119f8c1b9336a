"""Polynomial text format: a small recursive-descent parser and the printer.

Grammar (whitespace is ignored between tokens)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*      -- "/" only by a nonzero constant
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Juxtaposition such as ``2x`` or ``x y`` is rejected.  The printer writes
terms largest first in the ring's monomial order, so ``parse(format(p)) == p``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import PolySyntaxError, UnknownVariable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", m.start(3))
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.names = {n: k for k, n in enumerate(ring.names)}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value or t[0] != "op":
            raise PolySyntaxError(f"expected {value!r}", t[2])

    def parse(self):
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolySyntaxError(f"unexpected {t[1]!r}", t[2])
        return p

    def expr(self):
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op, _, pos = self.take()[1], None, self.peek()[2]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    raise PolySyntaxError("division only by a nonzero constant", pos)
                p = p.scale(self.ring.field.one / q.constant_term())
        return p

    def unary(self):
        t = self.peek()
        if t[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if t[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            t = self.take()
            if t[0] != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer", t[2])
            p = p ** int(t[1])
        return p

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "int":
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.names:
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            return self.ring.var(self.names[val])
        if t[:2] == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            raise PolySyntaxError("unexpected end of input", pos)
        raise PolySyntaxError(f"unexpected {val!r}", pos)


def parse_poly(text: str, ring):
    """Parse ``text`` as a polynomial of ``ring``."""
    return _Parser(text, ring).parse()


def format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(ring, m) -> str:
    parts = []
    for n, e in zip(ring.names, m):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def _negative(c) -> bool:
    return isinstance(c, Fraction) and c < 0


def format_poly(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for m, c in p.sorted_terms():
        neg = _negative(c)
        a = -c if neg else c
        mono = format_monomial(p.ring, m)
        if not mono:
            body = format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_coeff(a)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
