"""Full analyses of single polynomials and exhaustive verification sweeps.

The sweep compares two independent routes on every instance: the central
multiple route (hhat linear) against the eigenring oracle (center of E(f) is
F and every nonzero element generates E(f) as a two-sided ideal).  Any
disagreement on an instance with square-free hhat is a mismatch.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from functools import lru_cache
from itertools import product

from . import apoly, galois
from .algebra import center_of, eigenring, has_zero_divisor, is_central_simple_over_F
from .central import (NO, UNKNOWN, YES, check_input, evaluate_central, is_irreducible_over_F,
                      is_squarefree, mclm, monic_divisors_over_finite_F)
from .context import from_spec
from .skew import SkewPolynomial, divmod_right, product_of_linear, rem_right


@contextmanager
def _timed(timings, stage):
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[stage] = round((time.perf_counter() - start) * 1000, 3)


def decide(f, hhat=None):
    """A-polynomial report for f, classified when the context allows it."""
    ctx = f.ctx
    if ctx.kind == "twisted":
        rep = apoly.is_apoly_twisted(f, hhat)
        if rep.is_apoly == YES and galois.is_prime(ctx.n):
            rep = apoly.classify_prime_n(f, rep)
    else:
        rep = apoly.is_apoly_diff(f, hhat)
        if rep.is_apoly == YES:
            rep = apoly.classify_diff_p(f, rep)
    return rep


def _consistency(is_apoly, simple):
    if UNKNOWN in (is_apoly, simple):
        return "n/a"
    return "agree" if (is_apoly == YES) == (simple == YES) else "mismatch"


def analyze(ctx, f: SkewPolynomial) -> dict:
    """AnalysisReport as a JSON-ready dict.  Raises PreconditionError on invalid input."""
    timings = {}
    check_input(f)
    with _timed(timings, "mclm"):
        hhat = mclm(f)
    with _timed(timings, "hhat_properties"):
        sq = is_squarefree(hhat)
        irr = is_irreducible_over_F(hhat)
    with _timed(timings, "eigenring"):
        A = eigenring(f)
    with _timed(timings, "oracle"):
        cdim = len(center_of(A))
        simple, provenance = is_central_simple_over_F(A, sq)
    with _timed(timings, "apoly"):
        rep = decide(f, hhat)
    rep.consistency = _consistency(rep.is_apoly, simple)
    return {
        "ring": ctx.spec(),
        "f": f.to_text(),
        "m": f.degree,
        "constant_term_nonzero": bool(f[0]),
        "hhat": hhat.to_text(),
        "hhat_squarefree": sq,
        "hhat_irreducible": irr,
        "eigenring": {"dim": A.dim, "center_dim": cdim, "simple": simple, "provenance": provenance},
        "apoly": rep.to_json(),
        "timings_ms": timings,
    }


# -- sweeps ---------------------------------------------------------------

def monic_polynomials(ctx, degree: int):
    """Monic f of the given degree with nonzero constant term, in enumeration order."""
    elems = list(ctx.enumerate())
    nonzero = elems[1:]
    for low in product(elems, repeat=degree - 1):
        for c0 in nonzero:
            yield SkewPolynomial(ctx, (c0,) + tuple(reversed(low)) + (ctx.K.one,))


def _reducible_bruteforce(ctx, f) -> bool:
    elems = list(ctx.enumerate())
    for k in range(1, f.degree):
        for low in product(elems, repeat=k):
            if not rem_right(f, SkewPolynomial(ctx, low + (ctx.K.one,))):
                return True
    return False


def instance_record(ctx, f, deep: bool = True) -> dict:
    """Everything the acceptance criteria need about one sweep instance."""
    hhat = mclm(f)
    sq = is_squarefree(hhat)
    irr = is_irreducible_over_F(hhat)
    A = eigenring(f)
    cdim = len(center_of(A))
    simple, provenance = is_central_simple_over_F(A, sq)
    rep = decide(f, hhat)
    rec = {
        "f": f.to_text(),
        "m": f.degree,
        "hhat": hhat.to_text(),
        "hhat_degree": hhat.degree,
        "squarefree": sq,
        "irreducible": irr,
        "dim": A.dim,
        "center_dim": cdim,
        "simple": simple,
        "provenance": provenance,
        "is_apoly": rep.is_apoly,
        "route": rep.route,
        "consistency": _consistency(rep.is_apoly, simple) if sq else "skipped",
    }
    if rep.route == apoly.CASE_II:
        b, cs = rep.witnesses.get("alpha", rep.witnesses.get("b")), rep.witnesses["cs"]
        rebuilt = product_of_linear(ctx, [apoly.omega(ctx, c, b) for c in cs])
        rec["n_linear_factors"] = len(rep.factorization)
        rec["witness_ok"] = (rebuilt == f and cs[-1] == ctx.K.one
                             and all(apoly.similar_linear(ctx, b, apoly.omega(ctx, c, b)) is not None for c in cs))
        rec["witnesses"] = rep.to_json()["witnesses"]
    if deep and ctx.kind == "twisted":
        rec["minimality_ok"] = all(rem_right(evaluate_central(ctx, d), f)
                                   for d in monic_divisors_over_finite_F(hhat))
        rec["zero_divisor"] = has_zero_divisor(A)
        rec["reducible"] = _reducible_bruteforce(ctx, f)
    return rec


@lru_cache(maxsize=8)
def _ctx_from_json(spec_json):
    return from_spec(json.loads(spec_json))


def _worker(args):
    spec_json, coeff_values, deep = args
    ctx = _ctx_from_json(spec_json)
    out = []
    for values in coeff_values:
        f = SkewPolynomial(ctx, [ctx.K.from_value(v) for v in values])
        out.append(instance_record(ctx, f, deep))
    return out


def _record_failures(rec, ctx) -> list[str]:
    """Invariant checks from the structure theory, beyond the headline mismatch."""
    fails = []
    if rec["irreducible"] == YES and rec["dim"] * rec["hhat_degree"] != rec["m"] ** 2:
        fails.append("dimension law dim = m^2 / deg hhat")
    if rec["is_apoly"] == YES:
        if rec["dim"] != rec["m"] ** 2 or rec["center_dim"] != 1:
            fails.append("A-polynomial has dim m^2 and center dim 1")
        limit = ctx.n if ctx.kind == "twisted" else ctx.p
        if rec["m"] > limit:
            fails.append("degree bound for A-polynomials")
        if rec["route"] == apoly.CASE_II and not rec.get("witness_ok"):
            fails.append("Omega witnesses reproduce f")
        if "zero_divisor" in rec and (rec["zero_divisor"] == NO) != (rec["m"] == 1):
            fails.append("irreducible A-polynomials are exactly m = 1")
    if "minimality_ok" in rec and not rec["minimality_ok"]:
        fails.append("mclm minimality")
    if "zero_divisor" in rec and (rec["zero_divisor"] == YES) != rec["reducible"]:
        fails.append("zero divisor iff reducible")
    return fails


def summarize(ctx, records, elapsed) -> dict:
    summary = {
        "ring": ctx.spec(),
        "instances": len(records),
        "by_degree": {},
        "apoly_yes": 0,
        "apoly_no": 0,
        "skipped_not_squarefree": 0,
        "oracle_unknown": 0,
        "provenance": {"oracle": 0, "theorem": 0},
        "mismatches": 0,
        "mismatched": [],
        "invariant_failures": [],
        "elapsed_ms": round(elapsed * 1000, 1),
    }
    for rec in records:
        summary["by_degree"][str(rec["m"])] = summary["by_degree"].get(str(rec["m"]), 0) + 1
        summary["provenance"][rec["provenance"]] += 1
        if not rec["squarefree"]:
            summary["skipped_not_squarefree"] += 1
            continue
        summary["apoly_yes" if rec["is_apoly"] == YES else "apoly_no"] += 1
        if rec["simple"] == UNKNOWN:
            summary["oracle_unknown"] += 1
        if rec["consistency"] == "mismatch":
            summary["mismatches"] += 1
            summary["mismatched"].append(rec["f"])
        for msg in _record_failures(rec, ctx):
            summary["invariant_failures"].append({"f": rec["f"], "check": msg})
    return summary


def sweep_twisted(ctx, max_degree: int, jobs: int = 1, deep: bool = True, min_degree: int = 1):
    """Exhaustive sweep over monic f with nonzero constant term. Returns (summary, records)."""
    if ctx.kind != "twisted":
        from .errors import PreconditionError

        raise PreconditionError("finite K", "exhaustive sweeps need a twisted (finite) context")
    start = time.perf_counter()
    polys = [tuple(c.value for c in f.coeffs)
             for m in range(min_degree, max_degree + 1) for f in monic_polynomials(ctx, m)]
    spec_json = json.dumps(ctx.spec(), sort_keys=True)
    if jobs > 1 and len(polys) > 1:
        size = max(1, len(polys) // (jobs * 4))
        chunks = [polys[i:i + size] for i in range(0, len(polys), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_worker, [(spec_json, c, deep) for c in chunks]) for r in part]
    else:
        records = [instance_record(ctx, SkewPolynomial(ctx, [ctx.K.from_value(v) for v in vals]), deep)
                   for vals in polys]
    return summarize(ctx, records, time.perf_counter() - start), records


def sweep_corpus(ctx, polys, deep: bool = True):
    """Sweep an explicit list of polynomials (used for the infinite differential context)."""
    start = time.perf_counter()
    records = [instance_record(ctx, f, deep) for f in polys]
    return summarize(ctx, records, time.perf_counter() - start), records
