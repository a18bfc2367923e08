"""Exact evaluation of Salie-sum families and statistics of square roots of shifted primes."""

__version__ = "0.1.0"

from .bilinear import (
    Calibration,
    LengthSeq,
    SmoothFamily,
    WeightSeq,
    bound_cor_hyperbolic,
    bound_thm_bilinear_I,
    bound_thm_bilinear_I_smooth,
    bound_thm_bilinear_II,
    bound_thm_smooth,
    t_sum_hyperbolic,
    v_sum,
    v_sum_salie_form,
    v_sum_smooth,
    w_sum,
)
from .char_sums import (
    ShiftParams,
    f_eval,
    f_eval_salie,
    f_values,
    kloosterman,
    salie_closed,
    salie_direct,
    u_sum,
)
from .distribution import (
    RootMultiset,
    count_interval,
    discrepancy_direct,
    erdos_turan_bound,
    karatsuba_ratio,
    sqrt_shifted_primes,
)
from .field import FieldCtx, eq_phase, inv, legendre, make_field, sqrt_mod
from .primes import (
    PrimeTables,
    VaughanTerms,
    bound_s_prime,
    bound_s_prime_vaughan,
    heath_brown_decompose,
    s_lambda_sum,
    s_prime_sum,
    sieve,
    vaughan_decompose,
    vaughan_identity_check,
)
