"""Exact polynomial and free-module arithmetic with Groebner machinery."""

from .elements import (
    ModuleElement,
    Polynomial,
    format_terms,
    leading_term,
    monomial_text,
    parse_module_element,
    parse_polynomial,
)
from .groebner import (
    buchberger,
    is_groebner,
    module_equal,
    normal_form,
    reduce,
    reduce_basis,
    s_polynomial,
    syzygy_basis,
    syzygy_pairs,
)
from .monomial import ONE, VARS, bidegree, mono
from .orders import (
    ELIMINATION_Z,
    LEX_SIGMA_NONPOSITIVE,
    LEX_SIGMA_POSITIVE,
    InducedOrder,
    TermOrder,
    compare,
    lex_order,
)

__all__ = [
    "ELIMINATION_Z",
    "LEX_SIGMA_NONPOSITIVE",
    "LEX_SIGMA_POSITIVE",
    "InducedOrder",
    "ModuleElement",
    "ONE",
    "Polynomial",
    "TermOrder",
    "VARS",
    "bidegree",
    "buchberger",
    "compare",
    "format_terms",
    "is_groebner",
    "leading_term",
    "lex_order",
    "module_equal",
    "mono",
    "monomial_text",
    "normal_form",
    "parse_module_element",
    "parse_polynomial",
    "reduce",
    "reduce_basis",
    "s_polynomial",
    "syzygy_basis",
    "syzygy_pairs",
]
