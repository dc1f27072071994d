"""Deciding and classifying generalised A-polynomials.

f is a generalised A-polynomial when its eigenring is central simple over F.
Under a square-free minimal central multiple hhat this happens exactly when
hhat is linear, i.e. when f right-divides z - a for some a in F (z = t^n in
the twisted case, z = t^p in the differential case).  For prime n (twisted)
and for the differential case the yes-instances are further split into

* case (i): f = z - a itself and f has no linear right factor (irreducible);
* case (ii): f = prod_i (t - Omega_{c_i}(b)) with c_m = 1, all factors similar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import fp_poly, galois, linalg
from .central import NO, UNKNOWN, YES, CentralPolynomial, is_squarefree, mclm
from .errors import ConsistencyError, PreconditionError
from .fp_poly import RationalFunction
from .skew import (SkewPolynomial, divmod_right, omega, product_of_linear, right_divides,
                   similar_linear)

HHAT_LINEAR = "hhat-linear"
CASE_I = "theorem-case-i"
CASE_II = "theorem-case-ii"
NOT_SQUAREFREE = "not-squarefree"
HHAT_NONLINEAR = "hhat-degree>1"


@dataclass
class ApolyReport:
    is_apoly: str
    route: str
    hhat: CentralPolynomial
    witnesses: dict | None = None
    factorization: list | None = None
    consistency: str | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        ctx = self.hhat.ctx
        wit = None
        if self.witnesses is not None:
            wit = {}
            for k, v in self.witnesses.items():
                wit[k] = [ctx.format_element(x) for x in v] if isinstance(v, (list, tuple)) else ctx.format_element(v)
        return {
            "is_apoly": self.is_apoly,
            "route": self.route,
            "hhat": self.hhat.to_text(),
            "witnesses": wit,
            "factorization": None if self.factorization is None else [g.to_text() for g in self.factorization],
            "consistency": self.consistency,
            "notes": list(self.notes),
        }


def _require(ctx, kind):
    if ctx.kind != kind:
        raise PreconditionError(f"{kind} context", f"operation requires a {kind} context, got {ctx.kind}")


def is_apoly_twisted(f: SkewPolynomial, hhat: CentralPolynomial | None = None) -> ApolyReport:
    ctx = f.ctx
    _require(ctx, "twisted")
    hhat = hhat or mclm(f)
    if not is_squarefree(hhat):
        return ApolyReport(UNKNOWN, NOT_SQUAREFREE, hhat, notes=["hhat is not square-free"])
    if hhat.degree != 1:
        return ApolyReport(NO, HHAT_NONLINEAR, hhat)
    a = -hhat.coeffs[0]
    central = SkewPolynomial.t_power(ctx, ctx.n) - a
    if not right_divides(f, central):
        raise ConsistencyError(f"{f.pretty()} does not right-divide t^{ctx.n} - {a}")
    if f.degree > ctx.n:
        raise ConsistencyError(f"A-polynomial of degree {f.degree} exceeds n = {ctx.n}")
    return ApolyReport(YES, HHAT_LINEAR, hhat, witnesses={"a": a})


def _peel_finite(ctx, f):
    """Linear right factors of f, rightmost first, each the first root in enumeration order."""
    roots = []
    q = f
    while q.degree > 0:
        for b in ctx.enumerate():
            quo, rem = divmod_right(q, SkewPolynomial.linear(ctx, b))
            if not rem:
                roots.append(b)
                q = quo
                break
        else:
            return roots, q
    return roots, q


def _witnesses_from_roots(ctx, f, roots_right_first):
    """c_i with Omega_{c_i}(b_m) = b_i, c_m = 1; verified by re-multiplication."""
    b = roots_right_first[0]
    ordered = list(reversed(roots_right_first))
    cs = []
    for bi in ordered:
        c = similar_linear(ctx, b, bi)
        if c is None:
            raise ConsistencyError(f"t - {bi} is not similar to t - {b}")
        cs.append(c)
    cs[-1] = ctx.K.one
    rebuilt = product_of_linear(ctx, [omega(ctx, c, b) for c in cs])
    if rebuilt != f:
        raise ConsistencyError(f"witness product {rebuilt.pretty()} differs from {f.pretty()}")
    return b, cs, [SkewPolynomial.linear(ctx, bi) for bi in ordered]


def classify_prime_n(f: SkewPolynomial, report: ApolyReport | None = None) -> ApolyReport:
    ctx = f.ctx
    _require(ctx, "twisted")
    if not galois.is_prime(ctx.n):
        raise PreconditionError("n prime", f"classification needs prime n, got n = {ctx.n}")
    report = report or is_apoly_twisted(f)
    if report.is_apoly != YES:
        raise PreconditionError("f is a generalised A-polynomial", "classification needs a yes-instance")
    a = report.witnesses["a"]
    notes = list(report.notes)
    if f == SkewPolynomial.t_power(ctx, ctx.n) - a:
        preimage = next((b for b in ctx.enumerate() if ctx.norm(b) == a), None)
        if preimage is None:
            return ApolyReport(YES, CASE_I, report.hhat, {"a": a}, [f], notes=notes + ["a is not a norm"])
        notes.append(f"case (i) refuted: a = N({ctx.format_element(preimage)})")
    roots, rest = _peel_finite(ctx, f)
    if rest.degree > 0:
        raise ConsistencyError(f"yes-instance {f.pretty()} has no linear right factor left in {rest.pretty()}")
    b, cs, factors = _witnesses_from_roots(ctx, f, roots)
    if not ctx.norm(b) or not ctx.in_F(ctx.norm(b)):
        raise ConsistencyError("norm of b must lie in F^x")
    return ApolyReport(YES, CASE_II, report.hhat, {"a": a, "b": b, "cs": cs}, factors, notes=notes)


def is_apoly_diff(f: SkewPolynomial, hhat: CentralPolynomial | None = None) -> ApolyReport:
    ctx = f.ctx
    _require(ctx, "differential")
    hhat = hhat or mclm(f)
    if not is_squarefree(hhat):
        return ApolyReport(UNKNOWN, NOT_SQUAREFREE, hhat, notes=["hhat is not square-free"])
    if hhat.degree != 1:
        return ApolyReport(NO, HHAT_NONLINEAR, hhat)
    b = ctx.from_F(-hhat.coeffs[0])
    central = SkewPolynomial.t_power(ctx, ctx.p) - b
    if not right_divides(f, central):
        raise ConsistencyError(f"{f.pretty()} does not right-divide t^{ctx.p} - ({b})")
    if f.degree > ctx.p:
        raise ConsistencyError(f"A-polynomial of degree {f.degree} exceeds p = {ctx.p}")
    return ApolyReport(YES, HHAT_LINEAR, hhat, witnesses={"b": b})


def vp_solutions(ctx, a1, a0, bound: int | None = None, max_per_denominator: int = 4096):
    """All b = P/Q with deg P, deg Q <= bound and V_p(b) - a1*b - a0 = 0.

    For a fixed monic Q the map P -> V_p(P/Q) - a1*P/Q is GF(p)-linear, so each
    denominator costs one linear solve after clearing denominators.  Yields in
    order of Q (degree, then lexicographic) and within Q particular solution first.
    """
    _require(ctx, "differential")
    p = ctx.p
    bound = ctx.search_degree_bound if bound is None else bound
    Fp = galois.field(p, 1)
    K = ctx.K
    seen = set()
    for Q in fp_poly.monic_polys(p, bound):
        cols = []
        for k in range(bound + 1):
            b = RationalFunction(K, (0,) * k + (1,), Q)
            cols.append(ctx.vp(b) - a1 * b)
        den = a0.den
        for c in cols:
            den = fp_poly.mul(den, fp_poly.divmod_(c.den, fp_poly.gcd(den, c.den, p), p)[0], p)

        def cleared(x):
            return fp_poly.mul(x.num, fp_poly.divmod_(den, x.den, p)[0], p)

        polys = [cleared(c) for c in cols]
        target = cleared(a0)
        height = max([len(x) for x in polys] + [len(target), 1])
        rows = [[Fp(x[r] if r < len(x) else 0) for x in polys] for r in range(height)]
        rhs = [Fp(target[r] if r < len(target) else 0) for r in range(height)]
        sol = linalg.solve(rows, rhs, Fp)
        if sol is None:
            continue
        kernel = linalg.nullspace(rows, bound + 1, Fp)
        for count, combo in enumerate(product(range(p), repeat=len(kernel))):
            if count >= max_per_denominator:
                break
            x = list(sol)
            for coef, v in zip(combo, kernel):
                if coef:
                    x = [xi + vi * coef for xi, vi in zip(x, v)]
            P = fp_poly.strip(e.value for e in x)
            b = RationalFunction(K, P, Q)
            if b not in seen:
                seen.add(b)
                yield b


def linear_right_factor_diff(ctx, a1, a0, bound: int | None = None):
    """Some b with (t - b) right-dividing t^p - a1 t - a0, searched within the degree bound; else None."""
    return next(vp_solutions(ctx, a1, a0, bound), None)


def classify_diff_p(f: SkewPolynomial, report: ApolyReport | None = None) -> ApolyReport:
    ctx = f.ctx
    _require(ctx, "differential")
    report = report or is_apoly_diff(f)
    if report.is_apoly != YES:
        raise PreconditionError("f is a generalised A-polynomial", "classification needs a yes-instance")
    beta = report.witnesses["b"]
    bound = ctx.search_degree_bound
    notes = list(report.notes)
    zero = ctx.K.zero
    if f == SkewPolynomial.t_power(ctx, ctx.p) - beta:
        if linear_right_factor_diff(ctx, zero, beta) is None:
            return ApolyReport(YES, CASE_I, report.hhat, {"b": beta}, [f],
                               notes=notes + [f"irreducible within bound {bound}"])
    roots = []
    q = f
    while q.degree > 0:
        if q.degree == 1:
            alpha = -q[0]
        else:
            alpha = next((r for r in vp_solutions(ctx, zero, beta)
                          if right_divides(SkewPolynomial.linear(ctx, r), q)), None)
            if alpha is None:
                return ApolyReport(YES, HHAT_LINEAR, report.hhat, report.witnesses,
                                   notes=notes + [f"classification unknown: no linear right factor of "
                                                  f"{q.pretty()} within bound {bound}"])
        roots.append(alpha)
        q = divmod_right(q, SkewPolynomial.linear(ctx, alpha))[0]
    alpha, cs, factors = _witnesses_from_roots(ctx, f, roots)
    return ApolyReport(YES, CASE_II, report.hhat, {"b": beta, "alpha": alpha, "cs": cs}, factors, notes=notes)


def construct_apoly(ctx, b, cs) -> SkewPolynomial:
    """prod_i (t - Omega_{c_i}(b)), c_1 leftmost.

    This is the shape of every case (ii) A-polynomial; the converse needs hhat
    irreducible, so callers should still analyse the result.
    """
    cs = list(cs)
    if not cs:
        raise PreconditionError("cs nonempty", "need at least one c")
    if any(not c for c in cs):
        raise PreconditionError("c_i != 0", "every c_i must be nonzero")
    if cs[-1] != ctx.K.one:
        raise PreconditionError("c_m = 1", "the last c must be 1")
    if ctx.kind == "twisted" and not b:
        raise PreconditionError("N(b) in F^x", "b must be nonzero")
    return product_of_linear(ctx, [omega(ctx, c, b) for c in cs])
