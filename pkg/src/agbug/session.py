"""Line-oriented session files.

::

    # comment
    field QQ                           | field GF(5)
    ring R = x, y, u:2                 weights after a colon, default 1
    let F = dualgen R: X^2*Y^2         dual form, capitalised names
    let I = ideal R: x^3, y^3
    let p = poly R: x*y
    let W = factored R: x | x^2 ; y^3  generators split by ';', factors by '|'
    let P = fan: (1,0) (0,1) (-1,-1) ; {0,1} {1,2} {2,0}
    let A = algebra I socle=x^2*y^2    any command result can be bound
    hilbert I
    check hilbert I == (1, 2, 3, 2, 1)
    check bumd F G tau=x*y f="xi^2 - x*y" lam=-1 -> valid == true

Command arguments are positional or ``key=value``; quote values with spaces
unless they are bracketed.
An ideal may be written inline as ``(g1, g2, ...)`` in the current ring.
A value naming a binding refers to it; anything else is parsed in context.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Callable

from . import algebra as alg
from . import blowup as bu
from . import lefschetz as lf
from . import structure as st
from .errors import BugError, InvariantViolation
from .field import QQ, Field, parse_field
from .ideal import GradedIdeal, colon
from .poly import Polynomial, Ring
from .toric import toric_presentation

DEFAULT_SEED = 20240601


class SessionError(Exception):
    """Input error with a line number."""

    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line
        self.msg = msg


@dataclass
class Fan:
    rays: list
    cones: list


@dataclass
class Factored:
    ring: Ring
    factors: list


@dataclass
class Result:
    value: object
    fields: dict


@dataclass
class Entry:
    line: int
    source: str
    command: str
    bind: str | None = None
    fields: dict = dc_field(default_factory=dict)
    check: dict | None = None


@dataclass
class Options:
    seed: int = DEFAULT_SEED
    trials: int = 5
    bound: int = 100


class Session:
    def __init__(self, options: Options | None = None):
        self.options = options or Options()
        self.field: Field | None = None
        self.rings: dict[str, Ring] = {}
        self.current: Ring | None = None
        self.env: dict[str, object] = {}
        self.entries: list[Entry] = []

    # statements -----------------------------------------------------------

    def run_text(self, text: str) -> list[Entry]:
        for no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                self.statement(no, line)
            except SessionError:
                raise
            except InvariantViolation:
                raise
            except (BugError, ValueError, KeyError, ZeroDivisionError) as e:
                raise SessionError(no, f"{type(e).__name__}: {e}") from e
        return self.entries

    def statement(self, no: int, line: str) -> None:
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            if self.field is not None:
                raise SessionError(no, "only one field per session")
            self.field = parse_field(rest)
        elif head == "ring":
            self._ring(no, rest)
        elif head == "let":
            m = re.match(r"([A-Za-z_]\w*)\s*=\s*(.*)$", rest)
            if not m:
                raise SessionError(no, "expected 'let NAME = ...'")
            name, body = m.groups()
            value, entry = self._binding(no, line, name, body)
            self.env[name] = value
            if entry is not None:
                self.entries.append(entry)
        elif head == "check":
            self._check(no, line, rest)
        else:
            res = self._command(no, line)
            self.entries.append(Entry(no, line, head, None, res.fields))

    def _ring(self, no, rest):
        m = re.match(r"([A-Za-z_]\w*)\s*=\s*(.+)$", rest)
        if not m:
            raise SessionError(no, "expected 'ring NAME = x, y, ...'")
        name, spec = m.groups()
        names, weights = [], []
        for part in spec.split(","):
            v, _, w = part.strip().partition(":")
            names.append(v.strip())
            weights.append(int(w) if w else 1)
        R = Ring.make(names, weights, self.field or QQ)
        self.field = self.field or QQ
        self.rings[name] = R
        self.current = R

    def _ring_named(self, no, name) -> Ring:
        if name not in self.rings:
            raise SessionError(no, f"unknown ring {name!r}")
        return self.rings[name]

    def _binding(self, no, line, name, body):
        m = re.match(r"(dualgen|ideal|poly|factored)\s+([A-Za-z_]\w*)\s*:\s*(.*)$", body)
        if m:
            kind, rname, expr = m.groups()
            R = self._ring_named(no, rname)
            if kind == "dualgen":
                return R.mirror().parse(expr), None
            if kind == "poly":
                return R.parse(expr), None
            if kind == "ideal":
                return GradedIdeal(R, [R.parse(g) for g in expr.split(",") if g.strip()]), None
            gens = [[R.parse(f) for f in g.split("|")] for g in expr.split(";") if g.strip()]
            return Factored(R, gens), None
        m = re.match(r"fan\s*:\s*(.*);(.*)$", body)
        if m:
            rays = [tuple(int(c) for c in r.split(",")) for r in re.findall(r"\(([^)]*)\)", m[1])]
            cones = [tuple(int(c) for c in r.split(",")) for r in re.findall(r"\{([^}]*)\}", m[2])]
            return Fan(rays, cones), None
        res = self._command(no, body)
        cmd = body.split(None, 1)[0]
        return res.value, Entry(no, line, cmd, name, res.fields)

    def _check(self, no, line, rest):
        if "==" not in rest:
            raise SessionError(no, "check needs '== expected'")
        left, expected = rest.rsplit("==", 1)
        key = None
        if "->" in left:
            left, key = left.rsplit("->", 1)
            key = key.strip()
        res = self._command(no, left.strip())
        if key is None:
            key = next(iter(res.fields))
        if key not in res.fields:
            raise SessionError(no, f"result has no field {key!r}; fields: {', '.join(res.fields)}")
        actual = res.fields[key]
        ok = compare(actual, expected.strip())
        cmd = left.split(None, 1)[0]
        self.entries.append(Entry(no, line, cmd, None, res.fields,
                                  {"key": key, "expected": expected.strip(), "passed": ok}))

    # commands -------------------------------------------------------------

    def _command(self, no, text) -> Result:
        try:
            toks = tokens(text)
        except ValueError as e:
            raise SessionError(no, str(e)) from e
        if not toks:
            raise SessionError(no, "empty command")
        name, args = toks[0], toks[1:]
        if name not in COMMANDS:
            raise SessionError(no, f"unknown command {name!r}")
        params, fn = COMMANDS[name]
        pos, kw = [], {}
        for a in args:
            k, eq, v = a.partition("=")
            if eq and re.fullmatch(r"[A-Za-z_][\w-]*", k):
                kw[k] = v
            else:
                pos.append(a)
        if len(pos) > len(params):
            raise SessionError(no, f"{name} takes at most {len(params)} positional arguments")
        for p, v in zip(params, pos):
            if p in kw:
                raise SessionError(no, f"{name}: argument {p!r} given twice")
            kw[p] = v
        return fn(Ctx(self, no, name), **kw)


class Ctx:
    """Argument coercion helpers for one command invocation."""

    def __init__(self, session: Session, no: int, name: str):
        self.s = session
        self.no = no
        self.name = name

    def fail(self, msg):
        raise SessionError(self.no, f"{self.name}: {msg}")

    def obj(self, v):
        if isinstance(v, str) and v in self.s.env:
            return self.s.env[v]
        return v

    def need(self, v, what):
        if v is None:
            self.fail(f"missing argument {what!r}")
        return v

    def ring_of(self, x) -> Ring:
        if isinstance(x, (alg.ArtinianAlgebra,)):
            return x.ring
        if isinstance(x, GradedIdeal):
            return x.ring
        if isinstance(x, Polynomial):
            return x.ring.primal() if x.ring.dual else x.ring
        if isinstance(x, Factored):
            return x.ring
        if self.s.current is None:
            self.fail("no ring declared")
        return self.s.current

    def poly(self, v, ring: Ring, what="polynomial") -> Polynomial:
        v = self.obj(self.need(v, what))
        if isinstance(v, Polynomial):
            if v.ring == ring:
                return v
            if v.ring.names == ring.names[:v.ring.nvars] and not v.ring.dual:
                return v.embed(ring)
            self.fail(f"{what} lives in {v.ring}, expected {ring}")
        if not isinstance(v, str):
            self.fail(f"{what} must be a polynomial")
        return ring.parse(v)

    def polys(self, v, ring: Ring) -> list[Polynomial]:
        v = self.obj(v)
        if isinstance(v, list):
            return v
        return [ring.parse(t) for t in str(v).split(",") if t.strip()]

    def dual(self, v, what="dual form") -> Polynomial:
        v = self.obj(self.need(v, what))
        if isinstance(v, Polynomial) and v.ring.dual:
            return v
        if isinstance(v, (GradedIdeal, alg.ArtinianAlgebra)):
            return alg.dual_generator(self.algebra(v))
        if isinstance(v, str):
            if self.s.current is None:
                self.fail("no ring declared")
            return self.s.current.mirror().parse(v)
        self.fail(f"{what} must be a dual form")

    def ideal(self, v, what="ideal") -> GradedIdeal:
        v = self.obj(self.need(v, what))
        if isinstance(v, GradedIdeal):
            return v
        if isinstance(v, alg.ArtinianAlgebra):
            return v.ideal
        if isinstance(v, Polynomial) and v.ring.dual:
            return alg.annihilator(v)
        if isinstance(v, Factored):
            return GradedIdeal(v.ring, [st._product(fs, v.ring) for fs in v.factors])
        if isinstance(v, str) and v.startswith("(") and v.endswith(")"):
            R = self.ring_of(None)
            return GradedIdeal(R, [R.parse(g) for g in v[1:-1].split(",") if g.strip()])
        self.fail(f"{what} must be an ideal, dual form or algebra")

    def algebra(self, v, what="algebra", oriented=False) -> alg.ArtinianAlgebra:
        v = self.obj(self.need(v, what))
        if isinstance(v, alg.ArtinianAlgebra):
            A = v
        elif isinstance(v, Polynomial) and v.ring.dual:
            return alg.algebra_from_dual(v)
        else:
            A = alg.ArtinianAlgebra(self.ideal(v, what))
        if isinstance(A, alg.OrientedAlgebra):
            return A
        if A.is_gorenstein():
            return alg.orient(A, dual=alg.dual_generator(A))
        if oriented:
            self.fail(f"{what} is not Gorenstein, so it has no orientation")
        return A

    def map(self, A, T, images) -> alg.AlgebraMap:
        if images is None:
            return alg.natural_projection(A, T)
        return alg.make_map(A, T, [t.strip() for t in _unwrap(images).split(",")])

    def integer(self, v, default=None, what="integer") -> int:
        if v is None:
            if default is None:
                self.fail(f"missing argument {what!r}")
            return default
        v = self.obj(v)
        try:
            return int(v)
        except (TypeError, ValueError):
            self.fail(f"{what} must be an integer, got {v!r}")

    def scalar(self, v, default=1):
        if v is None:
            return self.s.field(default)
        return self.s.field(str(self.obj(v)))


def _unwrap(v) -> str:
    t = str(v).strip()
    return t[1:-1] if t[:1] in "([" and t[-1:] in ")]" else t


def tokens(text: str) -> list[str]:
    """Split on blanks outside quotes and brackets; quotes are removed."""
    out, cur, depth, quote = [], [], 0, None
    started = False
    for ch in text:
        if quote:
            if ch == quote:
                quote = None
            else:
                cur.append(ch)
            continue
        if ch in "\"'":
            quote, started = ch, True
        elif ch in "([{":
            depth += 1
            cur.append(ch)
        elif ch in ")]}":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced {ch!r}")
            cur.append(ch)
        elif ch.isspace() and depth == 0:
            if cur or started:
                out.append("".join(cur))
            cur, started = [], False
            continue
        else:
            cur.append(ch)
        started = True
    if quote:
        raise ValueError("unterminated quote")
    if depth:
        raise ValueError("unbalanced brackets")
    if cur or started:
        out.append("".join(cur))
    return out


# comparison of check values ----------------------------------------------------

def compare(actual, expected: str) -> bool:
    e = expected.strip()
    if isinstance(actual, bool):
        return e.lower() == ("true" if actual else "false")
    if actual is None:
        return e.lower() in ("none", "null")
    if isinstance(actual, int):
        try:
            return actual == int(e)
        except ValueError:
            return False
    if isinstance(actual, Polynomial):
        try:
            return actual == actual.ring.parse(e)
        except BugError:
            return False
    if isinstance(actual, (tuple, list)) and all(isinstance(a, int) for a in actual):
        return list(actual) == [int(t) for t in re.findall(r"-?\d+", e)]
    if isinstance(actual, (tuple, list)) and actual and all(isinstance(a, Polynomial) for a in actual):
        inner = e.strip("[]() ")
        try:
            want = [actual[0].ring.parse(t) for t in inner.split(",") if t.strip()]
        except BugError:
            return False
        return set(want) == set(actual) and len(want) == len(actual)
    if isinstance(actual, dict):
        return render(actual).replace(" ", "") == e.replace(" ", "")
    return render(actual).replace(" ", "") == e.replace(" ", "")


def render(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (tuple, list)):
        inner = ", ".join(render(x) for x in v)
        return f"({inner})" if isinstance(v, tuple) else f"[{inner}]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{render(k)}: {render(x)}" for k, x in v.items()) + "}"
    return str(v)


def to_tree(v):
    """JSON-ready form of a result value."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, (tuple, list)):
        return [to_tree(x) for x in v]
    if isinstance(v, dict):
        return {render(k): to_tree(x) for k, x in v.items()}
    return str(v)


# command implementations -----------------------------------------------------

def _gens(I: GradedIdeal) -> list:
    return I.minimal_generators()


def _algebra_fields(A) -> dict:
    out = {"hilbert": A.hilbert, "socle": A.socle_dims(), "gorenstein": A.is_gorenstein()}
    if isinstance(A, alg.OrientedAlgebra):
        out["dual"] = A.dual
    return out


def c_algebra(c: Ctx, X=None, socle=None, dual=None):
    A = c.algebra(X)
    if socle is not None or dual is not None:
        base = alg.ArtinianAlgebra(A.ideal)
        A = alg.orient(base, socle=c.poly(socle, A.ring)) if socle is not None else \
            alg.orient(base, dual=c.dual(dual))
    return Result(A, _algebra_fields(A))


def c_annihilate(c: Ctx, F=None):
    Fd = c.dual(F)
    I = alg.annihilator(Fd)
    return Result(I, {"generators": _gens(I), "hilbert": alg.ArtinianAlgebra(I).hilbert})


def c_dualgen(c: Ctx, X=None):
    A = c.algebra(X)
    F = alg.dual_generator(A)
    return Result(F, {"dual": F, "degree": A.top})


def c_hilbert(c: Ctx, X=None):
    A = c.algebra(X)
    return Result(A.hilbert, {"hilbert": A.hilbert, "dim": A.dim})


def c_socle(c: Ctx, X=None):
    A = c.algebra(X)
    return Result(A.socle_dims(), {"socle": A.socle_dims(), "gorenstein": A.is_gorenstein()})


def c_colon(c: Ctx, I=None, tau=None):
    J = c.ideal(I)
    t = c.poly(tau, J.ring, "tau")
    K = colon(J, t)
    return Result(K, {"generators": _gens(K), "hilbert": alg.ArtinianAlgebra(K).hilbert})


def c_mingen(c: Ctx, I=None):
    J = c.ideal(I)
    g = _gens(J)
    return Result(g, {"generators": g, "mu": len(g), "degrees": J.generator_degrees()})


def _pair(c: Ctx, A, T, images):
    A = c.algebra(A, "A", oriented=True)
    T = c.algebra(T, "T", oriented=True)
    return c.map(A, T, images)


def c_thom(c: Ctx, A=None, T=None, images=None):
    pi = _pair(c, A, T, images)
    tau = alg.thom_class(pi)
    return Result(tau, {"thom": tau, "euler": pi.apply(tau)})


def _coeffs(c: Ctx, v, ring: Ring) -> list:
    if v is None:
        return []
    return [ring.parse(t) for t in _unwrap(c.obj(v)).split(",") if t.strip()]


def c_blowup(c: Ctx, A=None, T=None, coeffs=None, lam=None, images=None):
    pi = _pair(c, A, T, images)
    n = pi.source.top - pi.target.top
    cs = _coeffs(c, coeffs, pi.source.ring) or [pi.source.ring.zero()] * (n - 1)
    b = bu.cohomological_blowup(pi, cs, c.scalar(lam))
    return Result(b.tilde_A, {
        "hilbert": b.tilde_A.hilbert, "tau": b.tau, "f": b.f, "n": b.n,
        "generators": _gens(b.tilde_A.ideal), "dual": b.tilde_A.dual,
        "thom_hat": b.thom_hat, "checks": b.checks})


def c_hat(c: Ctx, A=None, T=None, f=None, images=None):
    pi = _pair(c, A, T, images)
    R1 = bu.xi_ring(pi.source.ring)
    fp = c.poly(f, R1, "f")
    g = bu.gorenstein_criterion(pi, fp)
    hat = bu.construct_hat(pi, fp)
    return Result(hat.algebra, {
        "gorenstein": g.gorenstein, "hilbert": g.hilbert, "socle": g.socle_dims,
        "beta_injective": g.beta_injective, "tau": g.tau, "lam": g.lam,
        "generators": _gens(hat.algebra.ideal)})


def c_blowup_ideal(c: Ctx, I=None, tau=None, f=None):
    J = c.ideal(I)
    t = c.poly(tau, J.ring, "tau")
    fp = c.poly(f, bu.xi_ring(J.ring), "f")
    bi = bu.blowup_ideal(J, t, fp)
    return Result(bi.ideal, {"generators": _gens(bi.ideal), "hilbert": bi.algebra.hilbert,
                             "mu": bi.ideal.mu(), "checks": bi.checks})


def c_bumd(c: Ctx, F=None, G=None, tau=None, f=None, lam=None):
    Fd, Gd = c.dual(F, "F"), c.dual(G, "G")
    R = Fd.ring.primal()
    t = c.poly(tau, R, "tau")
    fp = c.poly(f, bu.xi_ring(R), "f")
    s = bu.bumd_status(Fd, Gd, t, fp, c.scalar(lam))
    return Result(s.dual.F_hat, {
        "valid": s.valid, "conditions": s.conditions, "F_hat": s.dual.F_hat,
        "G_tilde": s.dual.G_tilde, "h": s.dual.h, "hilbert": s.dual.A_md.hilbert,
        "expected_hilbert": s.expected_hilbert, "r": s.r3})


def c_consum(c: Ctx, F=None, H=None, sigma=None):
    Fd, Hd = c.dual(F, "F"), c.dual(H, "H")
    if Fd.ring != Hd.ring:
        Fd = Fd.embed(Hd.ring) if Fd.ring.nvars < Hd.ring.nvars else Fd
        Hd = Hd.embed(Fd.ring) if Hd.ring.nvars < Fd.ring.nvars else Hd
    sg = c.poly(sigma, Fd.ring.primal(), "sigma")
    cs = st.connected_sum(Fd, Hd, sg)
    return Result(cs.connected, {
        "hilbert": cs.connected.hilbert, "dual": cs.connected.dual,
        "fibered_hilbert": cs.fibered.hilbert, "T_hilbert": cs.T.hilbert,
        "tau_A": cs.tau_A, "tau_B": cs.tau_B, "checks": cs.checks})


def c_blowdown_check(c: Ctx, Ft=None, H=None):
    r = st.verify_blowdown_as_connected_sum(c.dual(Ft, "Ft"), c.dual(H, "H"))
    return Result(r, {"passed": all(r.checks.values()),
                      "hilbert": r.connected_sum.connected.hilbert, "checks": r.checks})


def c_mingen_homology(c: Ctx, I=None, tau=None, f=None):
    J = c.ideal(I)
    t = c.poly(tau, J.ring, "tau")
    fp = c.poly(f, bu.xi_ring(J.ring), "f")
    m = st.mingen_homology(J, t, fp)
    return Result(m, {"mu_blowup": m.mu_blowup, "mu_I": m.mu_I, "mu_colon": m.mu_colon,
                      "dim_H": m.dim_H, "dim_H_prime": m.dim_H_prime, "checks": m.checks})


def c_exact_zd(c: Ctx, X=None, a=None):
    A = c.algebra(X)
    b = st.exact_zero_divisor_partner(A, c.poly(a, A.ring, "a"))
    return Result(b, {"partner": b, "exact": b is not None})


def c_ci(c: Ctx, I=None, tau=None, f=None):
    J = c.ideal(I)
    t = c.poly(tau, J.ring, "tau")
    fp = c.poly(f, bu.xi_ring(J.ring), "f")
    r = st.ci_classification(J, t, fp)
    return Result(r, {"blowup_is_CI": r.blowup_is_CI, "A_is_CI": r.A_is_CI,
                      "T_is_CI": r.T_is_CI, "tau_exact": r.tau_exact, "partner": r.partner,
                      "mu": r.mu})


def c_wbc_embed(c: Ctx, W=None):
    w = c.obj(c.need(W, "W"))
    if not isinstance(w, Factored):
        c.fail("expects a 'factored' binding")
    e = st.watanabe_embed(w.ring, w.factors)
    return Result(e.target, {
        "hilbert": e.target.hilbert, "steps": len(e.steps),
        "generators": _gens(e.target.ideal), "defects": [s.defect for s in e.steps],
        "checks": e.checks})


def c_compressed(c: Ctx, X=None):
    A = c.algebra(X)
    return Result(st.is_compressed(A), {"compressed": st.is_compressed(A),
                                        "obstruction": st.bug_obstruction(A),
                                        "hilbert": A.hilbert})


def c_toric(c: Ctx, P=None):
    fan = c.obj(c.need(P, "P"))
    if not isinstance(fan, Fan):
        c.fail("expects a 'fan' binding")
    tp = toric_presentation(fan.rays, fan.cones, c.s.field)
    return Result(tp.reduced_algebra, {
        "hilbert": tp.hilbert, "reduced_ring": str(tp.reduced_ring),
        "reduced": _gens(tp.reduced_ideal), "stanley_reisner": tp.stanley_reisner,
        "linear": tp.linear, "validated": tp.validated})


def c_jordan(c: Ctx, X=None, ell=None):
    A = c.algebra(X)
    P = lf.jordan_type(A, c.poly(ell, A.ring, "ell"))
    return Result(P, {"jordan": P, "parts": len(P)})


def c_lefschetz(c: Ctx, X=None, ell=None):
    A = c.algebra(X)
    s = lf.lefschetz_status(A, c.poly(ell, A.ring, "ell"))
    return Result(s, {"slp": s.slp, "wlp": s.wlp, "jordan": s.jordan, "failing": s.failing,
                      "conjugate": s.conjugate, "sperner": s.sperner,
                      "cross_checked": s.cross_checked, "hilbert": A.hilbert})


def c_generic_lefschetz(c: Ctx, X=None, strategy="random", trials=None, bound=None, seed=None,
                        cap=None):
    A = c.algebra(X)
    o = c.s.options
    g = lf.generic_lefschetz(A, strategy, c.integer(trials, o.trials), c.integer(bound, o.bound),
                             c.integer(seed, o.seed), c.integer(cap, 100_000))
    return Result(g, {"slp": g.slp, "wlp": g.wlp, "slp_witness": g.slp_witness,
                      "wlp_witness": g.wlp_witness, "jordan": g.maximal[0] if g.maximal else (),
                      "maximal": g.maximal, "tried": g.tried, "strategy": strategy,
                      "seed": c.integer(seed, o.seed), "hilbert": A.hilbert})


def c_symdet(c: Ctx, X=None, i=None, j=None, params=None, source=None, target=None):
    A = c.algebra(X)
    deg = c.integer(i, what="i")
    jj = c.integer(j) if j is not None else None
    names = [t.strip() for t in params.split(",")] if params else None
    src = c.polys(source, A.ring) if source else None
    tgt = c.polys(target, A.ring) if target else None
    sd = lf.symbolic_lefschetz_determinant(A, deg, jj, names, src, tgt)
    return Result(sd.determinant, {"det": sd.determinant, "size": len(sd.matrix)})


def c_fiber(c: Ctx, A=None, T=None, coeffs=None, lam=None, fiber=None, images=None):
    pi = _pair(c, A, T, images)
    n = pi.source.top - pi.target.top
    cs = _coeffs(c, coeffs, pi.source.ring) or [pi.source.ring.zero()] * (n - 1)
    ff = bu.family_fiber(pi, cs, c.scalar(lam), c.scalar(fiber))
    return Result(ff.algebra, {"hilbert": ff.algebra.hilbert, "socle": ff.algebra.socle_dims(),
                               "f": ff.f})


COMMANDS: dict[str, tuple[list, Callable]] = {
    "algebra": (["X"], c_algebra),
    "annihilate": (["F"], c_annihilate),
    "dualgen": (["X"], c_dualgen),
    "hilbert": (["X"], c_hilbert),
    "socle": (["X"], c_socle),
    "colon": (["I", "tau"], c_colon),
    "mingen": (["I"], c_mingen),
    "thom": (["A", "T"], c_thom),
    "blowup": (["A", "T"], c_blowup),
    "hat": (["A", "T", "f"], c_hat),
    "blowup-ideal": (["I", "tau", "f"], c_blowup_ideal),
    "bumd": (["F", "G", "tau", "f"], c_bumd),
    "consum": (["F", "H", "sigma"], c_consum),
    "blowdown-check": (["Ft", "H"], c_blowdown_check),
    "mingen-homology": (["I", "tau", "f"], c_mingen_homology),
    "exact-zd": (["X", "a"], c_exact_zd),
    "ci": (["I", "tau", "f"], c_ci),
    "wbc-embed": (["W"], c_wbc_embed),
    "compressed": (["X"], c_compressed),
    "toric": (["P"], c_toric),
    "jordan": (["X", "ell"], c_jordan),
    "lefschetz": (["X", "ell"], c_lefschetz),
    "generic-lefschetz": (["X"], c_generic_lefschetz),
    "symdet": (["X", "i"], c_symdet),
    "fiber": (["A", "T"], c_fiber),
}
