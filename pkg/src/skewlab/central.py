"""The center of R, minimal central left multiples and properties of hhat over F."""

from __future__ import annotations

from dataclasses import dataclass

from . import fp_poly, linalg
from .errors import ConsistencyError, PreconditionError
from .skew import SkewPolynomial, rem_right

YES, NO, UNKNOWN = "yes", "no", "unknown"


# -- dense polynomials over F (lists of field elements, lowest first) -------

def _strip(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _sub(a, b, F):
    n = max(len(a), len(b))
    a = list(a) + [F.zero] * (n - len(a))
    b = list(b) + [F.zero] * (n - len(b))
    return _strip(x - y for x, y in zip(a, b))


def _mul(a, b, F):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return _strip(out)


def _divmod(a, b, F):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) <= db:
        return [], _strip(r)
    inv = b[-1].inverse()
    q = [F.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * inv
        if c:
            q[k - db] = c
            for j, y in enumerate(b):
                r[k - db + j] = r[k - db + j] - c * y
    return _strip(q), _strip(r[:db])


def _monic(a):
    if not a:
        return a
    inv = a[-1].inverse()
    return [x * inv for x in a]


def _gcd(a, b, F):
    a, b = _strip(a), _strip(b)
    while b:
        a, b = b, _divmod(a, b, F)[1]
    return _monic(a)


def _deriv(a, F):
    return _strip(a[i] * F.from_int(i) for i in range(1, len(a)))


def _powmod(a, e, m, F):
    result = [F.one]
    a = _divmod(a, m, F)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, a, F), m, F)[1]
        e >>= 1
        if e:
            a = _divmod(_mul(a, a, F), m, F)[1]
    return result


def _evaluate(a, x, F):
    acc = F.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class CentralPolynomial:
    """Monic polynomial over F in the central variable x (x stands for t^n or t^p)."""

    ctx: object
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != self.ctx.F.one:
            raise ValueError("central polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, CentralPolynomial) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_text(self) -> list[str]:
        return [self.ctx.format_F(c) for c in self.coeffs]

    def __str__(self):
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            s = self.ctx.format_F(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(s)
            elif c == self.ctx.F.one:
                terms.append(mono)
            else:
                terms.append(f"({s})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"CentralPolynomial({self})"


def center_generator(ctx) -> SkewPolynomial:
    """t^n in the twisted case (u = 1), g(t) - c = t^p in the differential case."""
    return SkewPolynomial.t_power(ctx, ctx.center_degree)


def evaluate_central(ctx, coeffs) -> SkewPolynomial:
    """sum_j c_j z^j as an element of R, for F-coefficients c_j."""
    n = ctx.center_degree
    out = [ctx.K.zero] * (n * (len(coeffs) - 1) + 1) if coeffs else []
    for j, c in enumerate(coeffs):
        out[n * j] = ctx.from_F(c)
    return SkewPolynomial(ctx, out)


def _flatten(ctx, rho: SkewPolynomial, m: int) -> list:
    vec = []
    for j in range(m):
        vec.extend(ctx.coords_over_F(rho[j]))
    return vec


def check_input(f: SkewPolynomial) -> None:
    if not f.is_monic() or f.degree < 1:
        raise PreconditionError("f monic of degree >= 1", f"f must be monic of degree >= 1, got {f.pretty()}")
    if not f.ctx.has_derivation and not f[0]:
        raise PreconditionError("(f,t)_r = 1", "f has zero constant term, so t right-divides f")


def mclm(f: SkewPolynomial) -> CentralPolynomial:
    """Minimal monic hhat over F with hhat(z) in Rf.

    Powers z^i are reduced modulo Rf and flattened to F-coordinates; the first
    F-linear dependence among them gives hhat.
    """
    check_input(f)
    ctx = f.ctx
    m = f.degree
    z = center_generator(ctx)
    cap = m * ctx.degree_over_F + 1
    rho = rem_right(SkewPolynomial.constant(ctx, ctx.K.one), f)
    vecs = []
    for i in range(cap + 1):
        vecs.append(_flatten(ctx, rho, m))
        kernel = linalg.nullspace(linalg.transpose(vecs), i + 1, ctx.F)
        if kernel:
            k = kernel[0]
            assert k[i] == ctx.F.one
            return CentralPolynomial(ctx, tuple(k))
        rho = rem_right(z * rho, f)
    raise ConsistencyError(f"no central dependence for {f.pretty()} within {cap} steps")


def bound_of(f: SkewPolynomial) -> SkewPolynomial:
    """h(t) = hhat(z), a two-sided multiple of f."""
    h = evaluate_central(f.ctx, mclm(f).coeffs)
    if rem_right(h, f):
        raise ConsistencyError("hhat(z) is not right-divisible by f")
    return h


def is_squarefree(hhat: CentralPolynomial) -> bool:
    F = hhat.ctx.F
    a = list(hhat.coeffs)
    return len(_gcd(a, _deriv(a, F), F)) == 1


def is_irreducible_over_F(hhat: CentralPolynomial) -> str:
    """yes / no / unknown.  Exact over finite F; bounded root search over GF(p)(v)."""
    ctx, d = hhat.ctx, hhat.degree
    if d == 1:
        return YES
    if ctx.F.is_finite:
        return YES if _rabin(list(hhat.coeffs), ctx.F) else NO
    return _irreducible_function_field(ctx, hhat)


def _rabin(f, F) -> bool:
    q = F.order
    d = len(f) - 1
    x = [F.zero, F.one]

    def frob(j):
        r = x
        for _ in range(j):
            r = _powmod(r, q, f, F)
        return r

    if _sub(frob(d), x, F):
        return False
    from .galois import prime_factors

    return all(len(_gcd(f, _sub(frob(d // r), x, F), F)) == 1 for r in prime_factors(d))


def _irreducible_function_field(ctx, hhat) -> str:
    """Rational root search: a root P/Q in lowest terms has P | a_0 and Q | a_d."""
    p, bound = ctx.p, ctx.irreducibility_bound
    coeffs = hhat.coeffs
    d = len(coeffs) - 1
    lcm = (1,)
    for c in coeffs:
        lcm = fp_poly.mul(lcm, fp_poly.divmod_(c.den, fp_poly.gcd(lcm, c.den, p), p)[0], p)
    ints = [fp_poly.mul(c.num, fp_poly.divmod_(lcm, c.den, p)[0], p) for c in coeffs]
    if not ints[0]:
        return NO
    a0, ad = ints[0], ints[-1]
    complete = fp_poly.degree(a0) <= bound and fp_poly.degree(ad) <= bound
    F = ctx.F
    tops = fp_poly.monic_divisors(a0, p, bound)
    bottoms = fp_poly.monic_divisors(ad, p, bound)
    for P in tops:
        for unit in range(1, p):
            for Q in bottoms:
                r = F(fp_poly.scale(P, unit, p), Q)
                if not _evaluate(list(coeffs), r, F):
                    return NO
    return YES if complete and d <= 3 else UNKNOWN


def monic_divisors_over_finite_F(hhat: CentralPolynomial) -> list[list]:
    """All monic divisors of hhat of degree < deg hhat (finite F only, brute force)."""
    from itertools import product

    F = hhat.ctx.F
    elems = list(F.elements())
    out = []
    for k in range(hhat.degree):
        for low in product(elems, repeat=k):
            cand = list(low) + [F.one]
            if not _divmod(list(hhat.coeffs), cand, F)[1]:
                out.append(cand)
    return out
