"""Constant-length substitution systems, sliding block codes and
conjugacy certificates."""

from .blockcode import (
    LocalRule,
    apply_rule,
    compose,
    constant_rule,
    extend,
    find_inverse_rule,
    identity_rule,
    image_language,
    parse_rule,
    rule_power,
    shift_normalize,
)
from .core import (
    AlphabetError,
    ConstantLengthError,
    DuplicateError,
    FormatError,
    HypothesisError,
    Language,
    PrimitivityError,
    RangeError,
    SubstitutionError,
    SupportError,
    WellDefinednessError,
    block,
    concat,
    show,
    subblocks,
)
from .presentation import check_symbol_bound, count_3blocks, k_block_presentation, k_block_rule
from .recognizability import (
    BlockCode,
    parse_window,
    recognizability_window,
    unique_concatenation,
)
from .substitution import (
    MORSE,
    TOEPLITZ,
    Substitution,
    apply,
    incidence,
    is_infinite,
    is_one_to_one,
    is_primitive,
    language,
    parse_substitution,
    power,
)
from .verifier import (
    build_certificate,
    build_theorem2_certificate,
    check_interior_disagreement,
    check_star,
    check_star2,
    find_N,
)

__version__ = "0.1.0"
