"""Exact big-integer laboratory for arithmetic-term representations of gcd.

A small term language over the naturals (addition, truncated subtraction,
multiplication, floor division, exponentiation, remainder), a catalog of
gcd formulas built from giant powers, the generating-function machinery
that explains why they work, and a modular fast path with a benchmark
harness comparing it against materializing the powers.
"""

from .errors import (
    BaseTooSmall,
    DivisionByZero,
    ExponentGuardExceeded,
    GcdLabError,
    InvalidInput,
    InvalidModulus,
    NegativeCoefficient,
    NonIntegerCoefficient,
    NoValidRank,
    PreconditionViolated,
    Underflow,
    UnboundVariable,
)
from .formulas import (
    GcdFormula,
    Variant,
    describe,
    divmod_gcd_term,
    euclid_gcd,
    formula_term,
    gcd_formula,
    gcd_via_formula,
    mazzanti_gcd_term,
    modmod_gcd_value,
)
from .modular import (
    BenchRecord,
    IdentityCheck,
    ModIdentityInstance,
    bench_compare,
    check_mod_identity,
    fast_pow_mod,
    mod_euclidean,
    modmod_fast_value,
    random_identity_instance,
)
from .parser import ParseError, SourceSpan, parse_term, pretty_print
from .series import (
    ExtractionParams,
    Polynomial,
    RationalFunction,
    check_extraction_conditions,
    count_solutions,
    extract_coefficient,
    f_ab,
    parse_polynomial,
    polynomial_text,
    series_coefficients,
)
from .terms import (
    Add,
    Const,
    FloorDiv,
    Mod,
    Monus,
    Mul,
    Pow,
    Term,
    Var,
    desugar_mod,
    evaluate,
    free_variables,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "Add",
    "BaseTooSmall",
    "BenchRecord",
    "Const",
    "DivisionByZero",
    "ExponentGuardExceeded",
    "ExtractionParams",
    "FloorDiv",
    "GcdFormula",
    "GcdLabError",
    "IdentityCheck",
    "InvalidInput",
    "InvalidModulus",
    "Mod",
    "ModIdentityInstance",
    "Monus",
    "Mul",
    "NegativeCoefficient",
    "NoValidRank",
    "NonIntegerCoefficient",
    "ParseError",
    "Polynomial",
    "Pow",
    "PreconditionViolated",
    "RationalFunction",
    "SourceSpan",
    "Term",
    "Underflow",
    "UnboundVariable",
    "Var",
    "Variant",
    "bench_compare",
    "check_extraction_conditions",
    "check_mod_identity",
    "count_solutions",
    "describe",
    "desugar_mod",
    "divmod_gcd_term",
    "euclid_gcd",
    "evaluate",
    "extract_coefficient",
    "f_ab",
    "fast_pow_mod",
    "formula_term",
    "free_variables",
    "gcd_formula",
    "gcd_via_formula",
    "mazzanti_gcd_term",
    "mod_euclidean",
    "modmod_fast_value",
    "modmod_gcd_value",
    "parse_polynomial",
    "parse_term",
    "polynomial_text",
    "pretty_print",
    "random_identity_instance",
    "series_coefficients",
    "substitute",
]
