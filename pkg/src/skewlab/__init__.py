"""skewlab: skew polynomial rings, eigenrings and generalised A-polynomials.

Two coefficient contexts are supported: twisted rings GF(q^n)[t; Frobenius]
and differential rings GF(p)(u)[t; d/du].
"""

from .algebra import center_of, eigenring, find_zero_divisor, has_zero_divisor, is_central_simple_over_F
from .analysis import analyze, sweep_corpus, sweep_twisted
from .apoly import (classify_diff_p, classify_prime_n, construct_apoly, is_apoly_diff, is_apoly_twisted,
                    linear_right_factor_diff)
from .central import bound_of, center_generator, is_irreducible_over_F, is_squarefree, mclm
from .context import DifferentialContext, TwistedContext, from_spec
from .errors import ConsistencyError, ParseError, PreconditionError, SkewlabError
from .skew import (SkewPolynomial, divmod_left, divmod_right, gcrd, lclm, omega, parse_poly,
                   product_of_linear, similar_linear, vp, xgcrd)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DifferentialContext", "ParseError", "PreconditionError", "SkewPolynomial",
    "SkewlabError", "TwistedContext", "analyze", "bound_of", "center_generator", "center_of",
    "classify_diff_p", "classify_prime_n", "construct_apoly", "divmod_left", "divmod_right", "eigenring",
    "find_zero_divisor", "from_spec", "gcrd", "has_zero_divisor", "is_apoly_diff", "is_apoly_twisted",
    "is_central_simple_over_F", "is_irreducible_over_F", "is_squarefree", "lclm", "linear_right_factor_diff",
    "mclm", "omega", "parse_poly", "product_of_linear", "similar_linear", "sweep_corpus", "sweep_twisted",
    "vp", "xgcrd",
]
