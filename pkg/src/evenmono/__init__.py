"""Monogenicity and Galois structure of even polynomials over the integers."""

from .cyclo import match_remark, real_cyclotomic_minpoly, shifted_variant
from .galois6 import Certainty, D6Params, GaloisLabel, Group, classify, d6_shape, is_c6
from .hunt import SearchHit, SearchSpec, run_search
from .mono import MonogenicityReport, Status, dedekind_test, is_monogenic
from .parse import ParseError, parse_poly, render
from .zfactor import factor_over_Z, is_irreducible
from .zint import Factorization, factorize
from .zpoly import IntPoly, discriminant, resultant

__all__ = [
    "Certainty", "D6Params", "Factorization", "GaloisLabel", "Group", "IntPoly",
    "MonogenicityReport", "ParseError", "SearchHit", "SearchSpec", "Status",
    "classify", "d6_shape", "dedekind_test", "discriminant", "factor_over_Z",
    "factorize", "is_c6", "is_irreducible", "is_monogenic", "match_remark",
    "parse_poly", "real_cyclotomic_minpoly", "render", "resultant", "run_search",
    "shifted_variant",
]
