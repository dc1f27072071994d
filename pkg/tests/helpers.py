"""Shared contexts and seeded random generators for the test suite."""

import os
import random

from skewlab import DifferentialContext, SkewPolynomial, TwistedContext

SEED = int(os.environ.get("SKEWLAB_SEED", "0"))

F4 = TwistedContext(2, 1, 2)
F8 = TwistedContext(2, 1, 3)
F9 = TwistedContext(3, 1, 2)
F27 = TwistedContext(3, 1, 3)
F16_OVER_F4 = TwistedContext(2, 2, 2)
D2 = DifferentialContext(2)
D3 = DifferentialContext(3)

TWISTED = [F4, F8, F9, F27, F16_OVER_F4]
DIFFERENTIAL = [D2, D3]
ALL = TWISTED + DIFFERENTIAL


def ctx_id(ctx):
    if ctx.kind == "twisted":
        return f"F{ctx.K.order}/F{ctx.q}"
    return f"F{ctx.p}(u)"


def rng(tag) -> random.Random:
    return random.Random(f"{SEED}:{tag}")


def rand_K(ctx, r: random.Random, height: int = 2):
    """Random element of K; in the differential case numerator and denominator have degree <= height."""
    if ctx.kind == "twisted":
        return ctx.K.from_value(r.randrange(ctx.K.order))
    p = ctx.p
    num = [r.randrange(p) for _ in range(r.randint(0, height) + 1)]
    den = [r.randrange(p) for _ in range(r.randint(0, height))] + [1]
    return ctx.K(num, den)


def rand_nonzero(ctx, r, height: int = 2):
    while True:
        a = rand_K(ctx, r, height)
        if a:
            return a


def rand_F(ctx, r, height: int = 1):
    """Random element of the fixed field F, as an element of K."""
    if ctx.kind == "twisted":
        return r.choice(list(ctx.F.elements()))
    p = ctx.p
    num = [r.randrange(p) for _ in range(r.randint(0, height) + 1)]
    den = [r.randrange(p) for _ in range(r.randint(0, height))] + [1]
    return ctx.from_F(ctx.F(num, den))


def rand_poly(ctx, r, max_degree: int, monic: bool = False, height: int = 1) -> SkewPolynomial:
    m = r.randint(0 if not monic else 1, max_degree)
    coeffs = [rand_K(ctx, r, height) for _ in range(m + 1)]
    if monic:
        coeffs[-1] = ctx.K.one
    return SkewPolynomial(ctx, coeffs)


def rand_nonzero_poly(ctx, r, max_degree: int, height: int = 1) -> SkewPolynomial:
    while True:
        g = rand_poly(ctx, r, max_degree, height=height)
        if g:
            return g
