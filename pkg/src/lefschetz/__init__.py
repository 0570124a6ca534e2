"""Exact-arithmetic toolkit for Lefschetz properties of monomial complete
intersections over prime fields.

Three independent decision routes are provided and meant to be cross-checked
against each other: an exact rank oracle on multiplication matrices, closed
form base-p digit criteria, and syzygy-gap computations. Everything is pure
integer arithmetic; all values are immutable and safe to share.
"""

from .classifier import (
    ConditionReport,
    DigitDecomposition,
    base_p_digits,
    classify,
    classify_n_ge_3,
    classify_two_p2,
    classify_two_p_odd,
    delta_zero_criterion,
    digit_decomposition,
    manhattan_check,
    slp_step_check,
)
from .graded_quotient import (
    GradedMap,
    MonomialCI,
    graded_basis,
    hilbert_function,
    mult_matrix,
)
from .lefschetz_oracle import (
    is_slp_oracle,
    is_wlp_oracle,
    kernel_witness,
    max_rank_in_every_degree,
)
from .prime_field import MatrixGFp, PrimeField, binomial_mod_p, rank
from .syzygy_gap import (
    RegionTag,
    SyzygyProfile,
    delta_value,
    hilbert_series_identity,
    kernel_dimension,
    presentation_matrix,
    region,
    slp_via_delta,
    syzygy_profile,
    syzygy_profile_scan,
)
from .verdict import KernelWitness, SlpVerdict

__version__ = "0.1.0"

__all__ = [
    "ConditionReport",
    "DigitDecomposition",
    "GradedMap",
    "KernelWitness",
    "MatrixGFp",
    "MonomialCI",
    "PrimeField",
    "RegionTag",
    "SlpVerdict",
    "SyzygyProfile",
    "base_p_digits",
    "binomial_mod_p",
    "classify",
    "classify_n_ge_3",
    "classify_two_p2",
    "classify_two_p_odd",
    "delta_value",
    "delta_zero_criterion",
    "digit_decomposition",
    "graded_basis",
    "hilbert_function",
    "hilbert_series_identity",
    "is_slp_oracle",
    "is_wlp_oracle",
    "kernel_dimension",
    "kernel_witness",
    "manhattan_check",
    "max_rank_in_every_degree",
    "mult_matrix",
    "presentation_matrix",
    "rank",
    "region",
    "slp_step_check",
    "slp_via_delta",
    "syzygy_profile",
    "syzygy_profile_scan",
    "__version__",
]
