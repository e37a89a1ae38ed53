"""Restricted divisor sums, their Thue-Morse-signed recursion, and the pentagonal recursion for sigma_x."""

from .associated import (
    AssociatedTerm,
    compensating_h_A,
    term_of_index,
    terms_with_weight,
    theorem1_table,
    verify_theorem1,
    weight_profile,
)
from .numeric import (
    Exponent,
    MixedArithmeticError,
    PentagonalTerm,
    ResourceCapError,
    pentagonal_classify,
    pentagonal_stream,
    popcount,
    pow_value,
    thue_morse_sign,
)
from .oracle import FiniteSequence, divisors, sigma_x, sigma_x_A, sigma_x_pow2_closed, v2
from .partitions import (
    R,
    T,
    W,
    DistinctPartition,
    b_n_x,
    distinct_partitions,
    eta,
    h_x,
    h_x_table,
    lahiri_g,
    partition_count_table,
    pe_po,
    theorem2_table,
)
from .pow2 import check_identity_66, check_identity_67, h_pow2, sigma_pow2_recursion
from .reports import SigmaTable, VerificationReport

__version__ = "0.1.0"
