"""Regenerate data/diff_corpus_p{2,3}.txt (deterministic, seed 0).

Each corpus mixes constructed A-polynomials prod (t - Omega_c(b)), central
elements t^p - beta (some without a linear right factor), and random monic
polynomials, deduplicated, with 30 entries per characteristic.
"""

import random
from itertools import product
from pathlib import Path

from skewlab import DifferentialContext, SkewPolynomial, construct_apoly
from skewlab.analysis import decide

SIZE = 30
MAX_DEGREE = {2: 2, 3: 3}


def rand_elem(rng, ctx, deg):
    num = [rng.randrange(ctx.p) for _ in range(rng.randint(0, deg) + 1)]
    den = [rng.randrange(ctx.p) for _ in range(rng.randint(0, 1))] + [1]
    return ctx.K(num, den)


def case_one_examples(ctx, limit):
    out = []
    for num in product(range(ctx.p), repeat=3):
        for den in ((1,), (0, 1), (1, 1)):
            beta = ctx.from_F(ctx.F(list(num), den))
            f = SkewPolynomial.t_power(ctx, ctx.p) - beta
            if beta and decide(f).route == "theorem-case-i":
                out.append(f)
                if len(out) == limit:
                    return out
    return out


def corpus(p, rng):
    ctx = DifferentialContext(p)
    polys = {}

    def add(f):
        polys.setdefault(f.to_text(), f)

    for f in case_one_examples(ctx, 3):
        add(f)
    while len(polys) < 12:
        b = rand_elem(rng, ctx, 2)
        cs = [rand_elem(rng, ctx, 1) or ctx.K.one for _ in range(rng.randint(0, p - 1))] + [ctx.K.one]
        add(construct_apoly(ctx, b, cs))
    while len(polys) < 16:
        add(SkewPolynomial.t_power(ctx, p) - ctx.from_F(ctx.F([rng.randrange(p) for _ in range(3)])))
    while len(polys) < SIZE:
        m = rng.randint(1, MAX_DEGREE[p])
        add(SkewPolynomial(ctx, [rand_elem(rng, ctx, 1) for _ in range(m)] + [ctx.K.one]))
    return list(polys)


def main():
    rng = random.Random(0)
    out_dir = Path(__file__).resolve().parent.parent / "data"
    for p in (2, 3):
        lines = corpus(p, rng)
        header = f"# differential corpus over F_{p}(u): one polynomial per line, coefficients lowest first\n"
        (out_dir / f"diff_corpus_p{p}.txt").write_text(header + "\n".join(lines) + "\n")
        print(p, len(lines))


if __name__ == "__main__":
    main()
