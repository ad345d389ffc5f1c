"""Exact arithmetic for the Hecke group G5 over the golden-ratio ring Z[L].

Modules
-------
ring        the ring Z[L] with L**2 = L + 1: exact arithmetic, gcd, units
ideals      factorization, residue contexts, subgroup index formulas
reduction   continued-fraction reduction of fractions and group membership
subgroups   congruence subgroups G0(tau): cosets, shears, sampling
normalizer  normalizers N(G0(tau)), quotient tables, elementary moduli
cli         command-line interface (``hecke5`` / ``python -m hecke5``)
"""

from .errors import (
    BadDeterminantError,
    BadRangeError,
    BothZeroError,
    BoundExceededError,
    FactorCapError,
    IntegrityError,
    IterationCapError,
    NotADivisorError,
    NotAGroupError,
    NotAUnitError,
    NotCoprimeError,
    NotReducedError,
    ParseError,
    UnitModulusError,
    ZeroInputError,
)
from .ring import (
    LAMBDA,
    ONE,
    ROOT5,
    ZERO,
    DivResult,
    RingElt,
    UnitRep,
    canonical_associate,
    divmod_nearest,
    exact_divide,
    format_element,
    gcd,
    is_canonical_associate,
    lambda_pow,
    parse_element,
    sign_real,
    unit_decompose,
)
from .ideals import (
    Factorization,
    ResidueCtx,
    factor,
    h_of,
    half_power_part,
    ideals_up_to_norm,
    index_in_g5,
    primes_above,
    relative_index,
    smallest_rational_integer,
)
from .reduction import (
    GEN_S,
    GEN_T,
    IDENTITY,
    GMatrix,
    PseudoStep,
    ReducedFormResult,
    Token,
    Word,
    eval_word,
    g5_decompose,
    is_reduced_form,
    parse_word,
    pseudo_divide,
    reduced_factor,
    scaling_exponent,
    t_power,
    word_string,
)
from .subgroups import (
    G0_2_GENERATORS,
    CosetTable,
    ShearPair,
    conjugate,
    coset_table,
    g0_contains,
    principal_contains,
    sample_subgroup,
    sample_words,
    shear_coset_equal,
)
from .normalizer import (
    COUNTEREXAMPLE_FOUND,
    DEFAULT_ELEMENTARY_BOUND,
    NO_COUNTEREXAMPLE,
    QUOTIENT_KLEIN4,
    QUOTIENT_TRIVIAL,
    QUOTIENT_Z4XZ4,
    ChainReport,
    ChainStep,
    ElementaryVerdict,
    NormalizerResult,
    QuotientTable,
    StrongVerdict,
    is_g5_elementary,
    normalizer_of,
    normalizes,
    normalizes_sampled,
    quotient_table,
    reduced_witness_bound,
    strongly_elementary,
    supergroup_chain,
)

__version__ = "0.1.0"

__all__ = [
    # errors
    "BadDeterminantError",
    "BadRangeError",
    "BothZeroError",
    "BoundExceededError",
    "FactorCapError",
    "IntegrityError",
    "IterationCapError",
    "NotADivisorError",
    "NotAGroupError",
    "NotAUnitError",
    "NotCoprimeError",
    "NotReducedError",
    "ParseError",
    "UnitModulusError",
    "ZeroInputError",
    # ring
    "LAMBDA",
    "ONE",
    "ROOT5",
    "ZERO",
    "DivResult",
    "RingElt",
    "UnitRep",
    "canonical_associate",
    "divmod_nearest",
    "exact_divide",
    "format_element",
    "gcd",
    "is_canonical_associate",
    "lambda_pow",
    "parse_element",
    "sign_real",
    "unit_decompose",
    # ideals
    "Factorization",
    "ResidueCtx",
    "factor",
    "h_of",
    "half_power_part",
    "ideals_up_to_norm",
    "index_in_g5",
    "primes_above",
    "relative_index",
    "smallest_rational_integer",
    # reduction
    "GEN_S",
    "GEN_T",
    "IDENTITY",
    "GMatrix",
    "PseudoStep",
    "ReducedFormResult",
    "Token",
    "Word",
    "eval_word",
    "g5_decompose",
    "is_reduced_form",
    "parse_word",
    "pseudo_divide",
    "reduced_factor",
    "scaling_exponent",
    "t_power",
    "word_string",
    # subgroups
    "G0_2_GENERATORS",
    "CosetTable",
    "ShearPair",
    "conjugate",
    "coset_table",
    "g0_contains",
    "principal_contains",
    "sample_subgroup",
    "sample_words",
    "shear_coset_equal",
    # normalizer
    "COUNTEREXAMPLE_FOUND",
    "DEFAULT_ELEMENTARY_BOUND",
    "NO_COUNTEREXAMPLE",
    "QUOTIENT_KLEIN4",
    "QUOTIENT_TRIVIAL",
    "QUOTIENT_Z4XZ4",
    "ChainReport",
    "ChainStep",
    "ElementaryVerdict",
    "NormalizerResult",
    "QuotientTable",
    "StrongVerdict",
    "is_g5_elementary",
    "normalizer_of",
    "normalizes",
    "normalizes_sampled",
    "quotient_table",
    "reduced_witness_bound",
    "strongly_elementary",
    "supergroup_chain",
    "__version__",
]
