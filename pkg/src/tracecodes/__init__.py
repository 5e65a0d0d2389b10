"""Trace-defined linear codes over F_{p^m} (p an odd prime, m > 2) with
exact complete weight enumerators.

The package pairs an exhaustive-enumeration oracle with closed-form
predictions built from quadratic Gauss sums and order-2 cyclotomic
numbers, all in exact integer / cyclotomic-integer arithmetic, plus a
CLI for building, predicting and verifying codes.
"""

from .charsums import (
    GaussSumExact,
    cyclotomic_number_direct,
    cyclotomic_numbers_order2,
    gauss_sum_closed_cyclotomic,
    gauss_sum_direct,
    quadratic_exponential_sum,
    quadratic_exponential_sum_closed,
    quadratic_gauss_sum,
    quadratic_gauss_sum_fp,
)
from .closedform import (
    CwePrediction,
    OptimalityReport,
    PairCounts,
    Regime,
    TraceProfile,
    classify_optimality,
    correction_sums,
    correction_sums_at_zero,
    discriminant_pair_counts,
    gauss_int,
    gauss_pair_int,
    parameter_regime,
    predict_cwe,
    predict_weight_distribution,
    predicted_length,
    prediction,
    symbol_count_closed,
    trace_pair_count_closed,
)
from .codes import (
    CodeSummary,
    CompleteWeightEnumerator,
    DefiningSet,
    WeightDistribution,
    build_defining_set,
    build_defining_set_general,
    code_summary,
    codeword,
    count_symbol,
    count_trace_pair,
    exhaustive_cwe,
    griesmer_lower_bound,
    scaled_defining_set_equivalent,
    summarize,
    trace_pair_table,
)
from .cyclotomic import CyclotomicInteger
from .fields import (
    FieldContext,
    FieldParams,
    irreducible_polynomials,
    is_irreducible,
    is_prime,
    legendre,
    make_field,
    prime_factors,
)

__version__ = "0.1.0"
