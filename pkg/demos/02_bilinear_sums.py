"""
Bilinear sums of f against random weights
=========================================

We draw unit-modulus weights, evaluate the Type-I sum V and the Type-II sum W,
and compare them with the calibrated bounds.  The ratios stay far below 1.
"""

import numpy as np

from salie_lab import (Calibration, LengthSeq, ShiftParams, WeightSeq, bound_thm_bilinear_I,
                       bound_thm_bilinear_II, make_field, v_sum, w_sum)
from salie_lab.errors import ConditionFail

q = 10007
ctx = make_field(q)
s = ShiftParams.create(ctx, 2, 9, 1)
cal = Calibration(C=10, kappa=0)
rng = np.random.default_rng(2024)

print(f"{'M':>6} {'N':>6} {'|V|':>10} {'V ratio':>9} {'|W|':>10} {'W ratio':>9}")
for M, N in [(10, 100), (100, 100), (100, 1000), (1000, 1000)]:
    alpha = WeightSeq.random_unit(M, rng)
    beta = WeightSeq.random_unit(N, rng)
    V = abs(v_sum(ctx, s, alpha, LengthSeq.constant(M, N)))
    try:
        rv = V / bound_thm_bilinear_I(q, M, N, alpha.l1, alpha.l2, cal)
        rv = f"{rv:9.4f}"
    except ConditionFail as exc:
        rv = exc.condition
    W = abs(w_sum(ctx, s, alpha, beta, M, N))
    rw = W / bound_thm_bilinear_II(q, M, N, alpha.l2, beta.linf, cal)
    print(f"{M:6d} {N:6d} {V:10.2f} {rv:>9} {W:10.2f} {rw:9.4f}")
