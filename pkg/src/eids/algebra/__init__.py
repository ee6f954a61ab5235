"""Coefficients, term orders, polynomials, module elements and matrices."""

from .fields import DEFAULT_PRIME, GF, QQ, PrimeField, RationalField, field_from_name
from .matrix import MinorExpander, PolyMatrix
from .orders import (
    DEGREVLEX,
    LEX,
    NEGDEGREVLEX,
    NEGLEX,
    POT,
    TOP,
    Block,
    TermOrder,
    blocks,
    degrevlex,
    elimination,
    lex,
    negdegrevlex,
    neglex,
    single,
)
from .parsing import ParseError, parse_poly
from .poly import FreeModuleElement, Poly, Vector
from .ring import MAX_DEGREE, DegreeOverflow, PolyRing

__all__ = [
    "DEFAULT_PRIME", "GF", "QQ", "PrimeField", "RationalField", "field_from_name",
    "MinorExpander", "PolyMatrix",
    "DEGREVLEX", "LEX", "NEGDEGREVLEX", "NEGLEX", "POT", "TOP", "Block", "TermOrder",
    "blocks", "degrevlex", "elimination", "lex", "negdegrevlex", "neglex", "single",
    "ParseError", "parse_poly", "FreeModuleElement", "Poly", "Vector",
    "MAX_DEGREE", "DegreeOverflow", "PolyRing",
]
