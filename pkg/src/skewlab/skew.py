"""Skew polynomials K[t; sigma, delta] with ta = sigma(a) t + delta(a).

Coefficients are stored lowest degree first with trailing zeros stripped; the
zero polynomial has an empty coefficient tuple and degree -1 (standing in for
minus infinity).
"""

from __future__ import annotations

from . import linalg
from .errors import PreconditionError


class SkewPolynomial:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        zero = ctx.K.zero
        cs = [ctx.K(c) if isinstance(c, int) else c for c in coeffs]
        while cs and cs[-1] == zero:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, ctx, a):
        return cls(ctx, (a,))

    @classmethod
    def t_power(cls, ctx, k: int, c=None):
        c = ctx.K.one if c is None else c
        return cls(ctx, (ctx.K.zero,) * k + (c,))

    @classmethod
    def linear(cls, ctx, root):
        """t - root."""
        return cls(ctx, (-root, ctx.K.one))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.K.zero

    def __bool__(self):
        return bool(self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.K.one

    def _coerce(self, other):
        if isinstance(other, SkewPolynomial):
            if other.ctx != self.ctx:
                raise TypeError("skew polynomials from different rings")
            return other
        try:
            return SkewPolynomial(self.ctx, (self.ctx.K(other),))
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.ctx, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPolynomial(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(other, self)

    def __pow__(self, e: int):
        result = SkewPolynomial.constant(self.ctx, self.ctx.K.one)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def left_scale(self, c):
        """c * self for a constant c."""
        return SkewPolynomial(self.ctx, [c * a for a in self.coeffs])

    def monic(self):
        return self.left_scale(self.lc().inverse())

    def to_text(self) -> str:
        return "[" + ", ".join(self.ctx.format_element(c) for c in self.coeffs) + "]"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            s = self.ctx.format_element(c)
            if i == 0:
                terms.append(s)
                continue
            mono = "t" if i == 1 else f"t^{i}"
            if c == self.ctx.K.one:
                terms.append(mono)
            else:
                terms.append(f"({s})*{mono}" if any(ch in s for ch in "+-/") else f"{s}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"SkewPolynomial({self.pretty()})"


def _check(f, g):
    if f.ctx != g.ctx:
        raise TypeError("skew polynomials from different rings")


def t_times(f: SkewPolynomial) -> SkewPolynomial:
    """t * f via t a = sigma(a) t + delta(a)."""
    ctx = f.ctx
    out = [ctx.K.zero] * (len(f.coeffs) + 1)
    for j, a in enumerate(f.coeffs):
        out[j + 1] = out[j + 1] + ctx.sigma(a)
        if ctx.has_derivation:
            out[j] = out[j] + ctx.delta(a)
    return SkewPolynomial(ctx, out)


def mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    _check(f, g)
    ctx = f.ctx
    if not f.coeffs or not g.coeffs:
        return SkewPolynomial(ctx)
    zero = ctx.K.zero
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    if not ctx.has_derivation:
        for i, a in enumerate(f.coeffs):
            if not a:
                continue
            for j, b in enumerate(g.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * ctx.sigma(b, i)
        return SkewPolynomial(ctx, out)
    row = g  # row = t^i * g, built incrementally
    for i, a in enumerate(f.coeffs):
        if i:
            row = t_times(row)
        if a:
            for j, b in enumerate(row.coeffs):
                if b:
                    out[j] = out[j] + a * b
    return SkewPolynomial(ctx, out)


def divmod_right(f: SkewPolynomial, g: SkewPolynomial):
    """(q, r) with f = q*g + r and deg r < deg g."""
    _check(f, g)
    if not g.coeffs:
        raise ZeroDivisionError("right division by the zero polynomial")
    ctx = f.ctx
    m = g.degree
    q = [ctx.K.zero] * max(f.degree - m + 1, 0)
    r = f
    sig_lc = {}
    while r.degree >= m:
        d = r.degree - m
        if d not in sig_lc:
            sig_lc[d] = ctx.sigma(g.lc(), d).inverse()
        c = r.lc() * sig_lc[d]
        q[d] = q[d] + c
        r = r - mul(SkewPolynomial.t_power(ctx, d, c), g)
    return SkewPolynomial(ctx, q), r


def divmod_left(f: SkewPolynomial, g: SkewPolynomial):
    """(q, r) with f = g*q + r and deg r < deg g."""
    _check(f, g)
    if not g.coeffs:
        raise ZeroDivisionError("left division by the zero polynomial")
    ctx = f.ctx
    m = g.degree
    q = [ctx.K.zero] * max(f.degree - m + 1, 0)
    r = f
    inv = g.lc().inverse()
    while r.degree >= m:
        d = r.degree - m
        c = ctx.sigma(r.lc() * inv, -m)
        q[d] = q[d] + c
        r = r - mul(g, SkewPolynomial.t_power(ctx, d, c))
    return SkewPolynomial(ctx, q), r


def rem_right(f, g):
    return divmod_right(f, g)[1]


def right_divides(g, f) -> bool:
    """True iff g is a right divisor of f."""
    return not divmod_right(f, g)[1]


def xgcrd(f, g):
    """(d, a, b) with d = a*f + b*g the monic gcrd, plus the lclm as a fourth entry.

    The lclm is the (monic) last vanishing combination of the right Euclidean
    remainder sequence.
    """
    _check(f, g)
    ctx = f.ctx
    if not f and not g:
        raise ValueError("gcrd(0, 0) is undefined")
    one, zero = SkewPolynomial.constant(ctx, ctx.K.one), SkewPolynomial(ctx)
    r0, r1 = f, g
    a0, b0, a1, b1 = one, zero, zero, one
    while r1:
        q, r = divmod_right(r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    inv = r0.lc().inverse()
    lclm = a1 * f
    if lclm:
        lclm = lclm.monic()
    return r0.left_scale(inv), a0.left_scale(inv), b0.left_scale(inv), lclm


def gcrd(f, g):
    return xgcrd(f, g)[0]


def lclm(f, g):
    if not f or not g:
        return SkewPolynomial(f.ctx)
    return xgcrd(f, g)[3]


def omega(ctx, v, alpha):
    """Omega_v(alpha) = sigma(v) alpha v^-1 + delta(v) v^-1."""
    if not v:
        raise ValueError("Omega_v requires v != 0")
    inv = v.inverse()
    return ctx.sigma(v) * alpha * inv + ctx.delta(v) * inv


def similar_linear(ctx, alpha, beta):
    """Some v != 0 with sigma(v) alpha + delta(v) = beta v, or None.

    Such v witnesses w(t - alpha) = (t - beta) v with w = sigma(v).  The map
    v -> sigma(v) alpha + delta(v) - beta v is F-linear, so v is read off a
    kernel basis in the coordinates of K over F.
    """
    if alpha == beta:
        return ctx.K.one
    N = ctx.degree_over_F
    cols = []
    for i in range(N):
        e = ctx.from_coords([ctx.F.one if j == i else ctx.F.zero for j in range(N)])
        image = ctx.sigma(e) * alpha + ctx.delta(e) - beta * e
        cols.append(ctx.coords_over_F(image))
    rows = linalg.transpose(cols)
    kernel = linalg.nullspace(rows, N, ctx.F)
    if not kernel:
        return None
    return ctx.from_coords(kernel[0])


def vp(ctx, b):
    if not ctx.has_derivation:
        raise PreconditionError("differential context", "V_p is defined for the differential context only")
    return ctx.vp(b)


def product_of_linear(ctx, roots) -> SkewPolynomial:
    """(t - r_1)(t - r_2)...(t - r_m), r_1 leftmost."""
    if not roots:
        raise ValueError("need at least one root")
    f = SkewPolynomial.linear(ctx, roots[0])
    for r in roots[1:]:
        f = f * SkewPolynomial.linear(ctx, r)
    return f


def parse_poly(ctx, text: str) -> SkewPolynomial:
    """Parse "[c0, c1, ...]" (lowest degree first) with elements in the context syntax."""
    from .errors import ParseError

    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("polynomial must be a bracketed coefficient list", text, 0)
    body = s[1:-1]
    offset = text.index("[") + 1
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((start, body[start:i]))
            start = i + 1
    parts.append((start, body[start:]))
    coeffs = []
    for pos, piece in parts:
        if not piece.strip():
            if len(parts) == 1:
                break
            raise ParseError("empty coefficient", text, offset + pos)
        try:
            coeffs.append(ctx.parse_element(piece))
        except ParseError as exc:
            raise ParseError(exc.message, text,
                             offset + pos + (exc.position or 0)) from None
    return SkewPolynomial(ctx, coeffs)
