"""Undesirable accuracy parameters of the integer logistic map, and the
patterns 00 / 0100 / 01010 in binary words such as the expansion of sqrt(2)."""

from .constructions import (
    LowerBoundParams,
    as_rate,
    lemma14_stats,
    lower_bound_bits,
    lower_bound_word,
    running_partial_sums,
    upper_bound_bits,
    upper_bound_word,
)
from .errors import DomainError, ResourceLimitError
from .logistic import (
    StateTrace,
    UndesirabilityReport,
    count_undesirable,
    is_undesirable_brute,
    is_undesirable_exact,
    iterate_states,
    logistic_map,
    sufficient_by_lemma2,
    sufficient_by_patterns,
    undesirability_report,
)
from .sqrt2 import DyadicBits, isqrt, sqrt2_bit_stream, sqrt2_fraction_bits
from .transforms import (
    NormalFormClass,
    TransformStep,
    classify_normal_form,
    excluded_subword_scan,
    is_fixed_point,
    phi,
    reduce_to_normal_form,
)
from .words import (
    BinaryWord,
    RateEstimate,
    count_patterns,
    count_zeros,
    pattern_indices,
    prefix_rates,
    zero_indices,
)

__version__ = "0.1.0"
