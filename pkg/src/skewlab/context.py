"""Coefficient contexts: the field K with its twist, derivation and base field F.

Two instantiations are supported:

* :class:`TwistedContext` -- K = GF(q^n) with sigma the q-Frobenius and
  delta = 0, so F = GF(q) is the fixed field of sigma.
* :class:`DifferentialContext` -- K = GF(p)(u) with sigma = id and
  delta = d/du, so F = GF(p)(u^p) is the field of constants.

Both expose the same surface (``sigma``, ``delta``, ``coords_over_F``,
``from_coords``, ``to_F``/``from_F``, parsing and printing) so the skew
polynomial and algebra layers never branch on the kind of context beyond
``has_derivation``.
"""

from __future__ import annotations

import json
import os
import re
from itertools import product

from . import fp_poly, galois
from .errors import ParseError, PreconditionError
from .fp_poly import RationalFunction, RationalFunctionField


class FixedField:
    """GF(q) realised inside GF(q^n) as the elements fixed by the Frobenius."""

    is_finite = True

    def __init__(self, K: galois.GaloisField, q: int):
        self.K = K
        self.p = K.p
        self.order = q
        self._elements = [a for a in K.elements() if a ** q == a]
        assert len(self._elements) == q
        self.zero, self.one = K.zero, K.one

    def from_int(self, k: int):
        return self.K.from_int(k)

    def elements(self):
        return iter(self._elements)

    def normalize_row(self, row):
        return row

    def __repr__(self):
        return f"GF({self.order})"


class TwistedContext:
    kind = "twisted"
    has_derivation = False

    def __init__(self, p: int, e: int = 1, n: int = 2, modulus=None, var: str = "w"):
        if n < 1 or e < 1:
            raise ValueError("e and n must be positive")
        self.p, self.e, self.n = p, e, n
        self.q = p ** e
        self.K = galois.field(p, e * n, modulus, var)
        self.F = FixedField(self.K, self.q)
        self.degree_over_F = n
        self.center_degree = n
        order = self.K.order
        frob = [(self.K.from_value(v) ** self.q).value for v in range(order)]
        self._sigma = [list(range(order))]
        for _ in range(n - 1):
            prev = self._sigma[-1]
            self._sigma.append([frob[x] for x in prev])
        assert [frob[x] for x in self._sigma[-1]] == self._sigma[0], "sigma must have order n"
        self._basis = [self.K.gen ** i for i in range(n)]
        self._coords = {}
        for cs in product(self.F._elements, repeat=n):
            a = self.K.zero
            for c, b in zip(cs, self._basis):
                a = a + c * b
            self._coords[a.value] = cs
        assert len(self._coords) == order

    # -- field maps --------------------------------------------------------
    def sigma(self, a, j: int = 1):
        return self.K.from_value(self._sigma[j % self.n][a.value])

    def delta(self, a, j: int = 1):
        return a if j == 0 else self.K.zero

    def norm(self, b):
        r = self.K.one
        for j in range(self.n):
            r = r * self.sigma(b, j)
        assert self.in_F(r)
        return r

    # -- F-structure -------------------------------------------------------
    def coords_over_F(self, a) -> tuple:
        return self._coords[a.value]

    def from_coords(self, cs):
        a = self.K.zero
        for c, b in zip(cs, self._basis):
            a = a + c * b
        return a

    def in_F(self, a) -> bool:
        return self.sigma(a) == a

    def to_F(self, a):
        if not self.in_F(a):
            raise ValueError(f"{a} does not lie in GF({self.q})")
        return a

    def from_F(self, x):
        return x

    def enumerate(self):
        """Every element of K once, lexicographic on GF(p)-coordinates, least significant first."""
        return self.K.elements()

    # -- text --------------------------------------------------------------
    def parse_element(self, text: str):
        return parse_expression(text, self.K, self.K.var)

    def format_element(self, a) -> str:
        return str(a)

    def format_F(self, x) -> str:
        return str(x)

    def spec(self) -> dict:
        return {"kind": "twisted", "p": self.p, "e": self.e, "n": self.n, "modulus": list(self.K.modulus)}

    def __eq__(self, other):
        return isinstance(other, TwistedContext) and self.spec() == other.spec()

    def __hash__(self):
        return hash(json.dumps(self.spec(), sort_keys=True))

    def __reduce__(self):
        return (TwistedContext, (self.p, self.e, self.n, self.K.modulus, self.K.var))

    def __repr__(self):
        return f"GF({self.q}^{self.n})[t; Frobenius]"


class DifferentialContext:
    kind = "differential"
    has_derivation = True

    def __init__(self, p: int, search_degree_bound: int = 4, irreducibility_bound: int = 6, var: str = "u"):
        if not galois.is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.search_degree_bound = search_degree_bound
        self.irreducibility_bound = irreducibility_bound
        self.K = RationalFunctionField(p, var)
        self.F = RationalFunctionField(p, "v")  # v = u^p
        self.degree_over_F = p
        self.center_degree = p

    def sigma(self, a, j: int = 1):
        return a

    def delta(self, a, j: int = 1):
        for _ in range(j):
            if not a:
                break
            a = a.derivative()
        return a

    def vp(self, b):
        """b^p + delta^(p-1)(b); (t - b)^p = t^p - vp(b)."""
        return b ** self.p + self.delta(b, self.p - 1)

    def coords_over_F(self, a: RationalFunction) -> tuple:
        p = self.p
        num = fp_poly.mul(a.num, fp_poly.power(a.den, p - 1, p), p)
        den = a.den  # den(u)^p = den(v) since coefficients lie in GF(p)
        out = []
        for i in range(p):
            part = fp_poly.strip(num[i::p])
            out.append(RationalFunction(self.F, part, den))
        return tuple(out)

    def from_coords(self, cs):
        a = self.K.zero
        for i, c in enumerate(cs):
            if c:
                a = a + self.from_F(c) * RationalFunction(self.K, (0,) * i + (1,), (1,), reduced=True)
        return a

    def in_F(self, a) -> bool:
        return fp_poly.deflate(a.num, self.p) is not None and fp_poly.deflate(a.den, self.p) is not None

    def to_F(self, a):
        num, den = fp_poly.deflate(a.num, self.p), fp_poly.deflate(a.den, self.p)
        if num is None or den is None:
            raise ValueError(f"{a} is not a constant for d/du")
        return RationalFunction(self.F, num, den, reduced=True)

    def from_F(self, x):
        return RationalFunction(self.K, fp_poly.inflate(x.num, self.p), fp_poly.inflate(x.den, self.p), reduced=True)

    def enumerate(self):
        raise PreconditionError("finite K", "cannot enumerate the infinite field GF(p)(u)")

    def parse_element(self, text: str):
        return parse_expression(text, self.K, self.K.var)

    def format_element(self, a) -> str:
        return str(a)

    def format_F(self, x) -> str:
        return str(self.from_F(x))

    def spec(self) -> dict:
        return {"kind": "differential", "p": self.p, "search_degree_bound": self.search_degree_bound,
                "irreducibility_bound": self.irreducibility_bound}

    def __eq__(self, other):
        return isinstance(other, DifferentialContext) and self.spec() == other.spec()

    def __hash__(self):
        return hash(json.dumps(self.spec(), sort_keys=True))

    def __reduce__(self):
        return (DifferentialContext, (self.p, self.search_degree_bound, self.irreducibility_bound, self.K.var))

    def __repr__(self):
        return f"GF({self.p})(u)[t; d/du]"


def from_spec(spec) -> TwistedContext | DifferentialContext:
    """Build a context from a ring spec: a dict, an inline JSON string, or a path to a JSON file."""
    if isinstance(spec, str):
        text = spec
        if not spec.lstrip().startswith("{") and os.path.exists(spec):
            with open(spec) as fh:
                text = fh.read()
        try:
            spec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid ring spec JSON: {exc.msg}", text, exc.pos) from None
    if not isinstance(spec, dict):
        raise ParseError("ring spec must be a JSON object")
    kind = spec.get("kind")
    try:
        if kind == "twisted":
            return TwistedContext(int(spec["p"]), int(spec.get("e", 1)), int(spec["n"]), spec.get("modulus"))
        if kind == "differential":
            return DifferentialContext(int(spec["p"]), int(spec.get("search_degree_bound", 4)),
                                       int(spec.get("irreducibility_bound", 6)))
    except KeyError as exc:
        raise ParseError(f"ring spec is missing field {exc.args[0]!r}") from None
    raise ParseError(f"unknown ring kind {kind!r}")


# -- element expressions --------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", int(m.group(1)), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_expression(text: str, field, var: str):
    """Evaluate an arithmetic expression in ``var`` with integer literals inside ``field``."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def fail(msg, tok=None):
        tok = tok or peek()
        raise ParseError(msg, text, tok[2])

    def expr():
        val = term()
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while True:
            kind, v, _ = peek()
            if kind == "op" and v in "*/":
                take()
                rhs = unary()
                if v == "/":
                    if not rhs:
                        fail("division by zero", toks[i - 1])
                    val = val / rhs
                else:
                    val = val * rhs
            elif kind in ("int", "name") or (kind == "op" and v == "("):
                val = val * unary()
            else:
                return val

    def unary():
        if peek()[0] == "op" and peek()[1] == "-":
            take()
            return -unary()
        if peek()[0] == "op" and peek()[1] == "+":
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            tok = take()
            if tok[0] != "int":
                fail("expected integer exponent", tok)
            base = base ** tok[1]
        return base

    def atom():
        kind, v, _ = tok = take()
        if kind == "int":
            return field.from_int(v)
        if kind == "name":
            if v != var:
                fail(f"unknown symbol {v!r} (expected {var!r})", tok)
            return field.gen
        if kind == "op" and v == "(":
            val = expr()
            if take()[1] != ")":
                fail("expected ')'", toks[i - 1])
            return val
        fail("unexpected token", tok)

    if peek()[0] == "end":
        fail("empty expression")
    val = expr()
    if peek()[0] != "end":
        fail("unexpected trailing input")
    return val
